#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kreweras/bijection.hpp"
#include "kreweras/counting.hpp"
#include "kreweras/depth_search.hpp"
#include "kreweras/enumerate.hpp"
#include "kreweras/map_io.hpp"
#include "kreweras/map_ops.hpp"
#include "kreweras/sampler.hpp"
#include "kreweras/walk.hpp"

namespace kreweras {

namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream content;
  if (path == "-") {
    content << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    content << in.rdbuf();
  }
  return content.str();
}

MarkedDepthMap to_marked_depth(ParsedMap pm) {
  if (!pm.tree || !pm.marked) {
    throw std::invalid_argument("input must carry tree and marked fields");
  }
  const std::uint32_t degree = pm.map.degree(pm.map.root_vertex());
  if (degree < 2) {
    throw std::invalid_argument("root-vertex degree must be at least 2");
  }
  return {std::move(pm.map), std::move(*pm.tree), *pm.marked, degree - 2};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice walks with steps West, South and North-East, and their rooted planar map counterparts"};
  app.name("kreweras");
  app.set_version_flag("--version", "1.0.0");
  app.require_subcommand(1);

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "Report every family a word belongs to");
  std::string classify_word;
  cmd_classify->add_option("walk", classify_word, "word over {a, b, c}")->required();
  cmd_classify->callback([&] {
    const Walk w = Walk::parse(classify_word);
    const WalkClassification cls = classify(w);
    ordered_json j;
    j["walk"] = w.letters();
    j["length"] = w.length();
    const auto [x, y] = w.endpoint();
    j["endpoint"] = ordered_json::array({x, y});
    j["is_meander"] = cls.is_meander;
    j["is_excursion"] = cls.is_excursion;
    j["kreweras_prefix_ok"] = cls.kreweras_prefix_ok;
    j["is_kreweras_to_origin"] = cls.is_kreweras_to_origin;
    if (cls.kreweras_target) {
      j["kreweras_target"] = *cls.kreweras_target;
    } else {
      j["kreweras_target"] = nullptr;
    }
    if (cls.size) {
      j["size"] = *cls.size;
    } else {
      j["size"] = nullptr;
    }
    out << j.dump() << "\n";
  });

  // count
  auto* cmd_count = app.add_subcommand("count", "Exact number of objects of one size");
  std::string count_kind;
  std::int64_t count_n = 0;
  std::optional<std::int64_t> count_i;
  cmd_count->add_option("kind", count_kind,
                        "kreweras_origin|excursion|projected|cubic|depth_map|"
                        "kreweras_to|near_cubic_to")
      ->required();
  cmd_count->add_option("n", count_n, "size")->required();
  cmd_count->add_option("--target", count_i, "boundary point for the *_to kinds");
  cmd_count->callback([&] {
    const auto kind = count_kind_from_string(count_kind);
    if (!kind) throw std::invalid_argument("unknown count kind: " + count_kind);
    out << count(*kind, count_n, count_i) << "\n";
  });

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "List a walk family, one word per line");
  std::string enum_family;
  int enum_n = 0;
  std::optional<int> enum_i;
  cmd_enum->add_option("family", enum_family, "kreweras_origin|excursion|kreweras_to")
      ->required();
  cmd_enum->add_option("n", enum_n, "size")->required();
  cmd_enum->add_option("--target", enum_i, "boundary point for kreweras_to");
  cmd_enum->callback([&] {
    const auto family = walk_family_from_string(enum_family);
    if (!family) throw std::invalid_argument("unknown walk family: " + enum_family);
    for (const Walk& w : enumerate_walks(*family, enum_n, enum_i)) {
      out << w.letters() << "\n";
    }
  });

  // to-map
  auto* cmd_tomap = app.add_subcommand("to-map", "Build the marked depth map of a walk");
  std::string tomap_word;
  std::uint32_t tomap_target = 0;
  std::string tomap_format = "json";
  cmd_tomap->add_option("walk", tomap_word, "word over {a, b, c}")->required();
  cmd_tomap->add_option("--target", tomap_target, "the walk ends at (target, 0); default 0");
  cmd_tomap->add_option("--format", tomap_format, "json|dot (default json)");
  cmd_tomap->callback([&] {
    const MarkedDepthMap m = walk_to_map(Walk::parse(tomap_word), tomap_target);
    if (tomap_format == "json") {
      out << map_to_json(m.map, &m.tree, m.marked) << "\n";
    } else if (tomap_format == "dot") {
      out << map_to_dot(m.map, &m.tree, m.marked);
    } else {
      throw std::invalid_argument("unknown format: " + tomap_format);
    }
  });

  // to-walk
  auto* cmd_towalk = app.add_subcommand("to-walk", "Read the walk back from a marked depth map");
  std::string towalk_input;
  cmd_towalk->add_option("input", towalk_input, "JSON file path, or - for stdin")->required();
  cmd_towalk->callback([&] {
    const MarkedDepthMap m = to_marked_depth(map_from_json(read_input(towalk_input)));
    out << map_to_walk(m).letters() << "\n";
  });

  // sample
  auto* cmd_sample = app.add_subcommand("sample", "Draw uniform random objects");
  std::string sample_target;
  int sample_size = 0;
  std::uint64_t sample_seed = 0;
  std::uint64_t sample_count = 1;
  std::string sample_format = "json";
  cmd_sample
      ->add_option("--target", sample_target,
                   "projected|excursion|marked_depth|near_cubic|cubic|triangulation")
      ->required();
  cmd_sample->add_option("--size", sample_size, "object size")->required();
  cmd_sample->add_option("--seed", sample_seed, "random seed; results are reproducible")
      ->required();
  cmd_sample->add_option("--count", sample_count, "how many samples (default 1, one per line)");
  cmd_sample->add_option("--format", sample_format, "json|dot|walk (default json)");
  cmd_sample->callback([&] {
    const bool walk_target = sample_target == "projected" || sample_target == "excursion";
    if (sample_format != "json" && sample_format != "dot" && sample_format != "walk") {
      throw std::invalid_argument("unknown format: " + sample_format);
    }
    if (sample_format == "walk" && !walk_target) {
      throw std::invalid_argument("format 'walk' applies to projected and excursion targets");
    }
    if (sample_format == "dot" && walk_target) {
      throw std::invalid_argument("format 'dot' applies to map targets");
    }
    if (sample_format == "dot" && sample_count != 1) {
      throw std::invalid_argument("format 'dot' emits a single item; use --count 1");
    }
    std::optional<SampleTarget> map_target;
    if (!walk_target) {
      map_target = sample_target_from_string(sample_target);
      if (!map_target) throw std::invalid_argument("unknown sample target: " + sample_target);
    }
    for (std::uint64_t k = 0; k < sample_count; ++k) {
      Rng rng(derive_seed(sample_seed, k));
      if (sample_target == "projected") {
        const ProjectedWalk p = sample_projected(sample_size, rng);
        if (sample_format == "walk") {
          out << p.letters() << "\n";
        } else {
          ordered_json j;
          j["kind"] = "projected";
          j["letters"] = p.letters();
          j["display"] = p.display();
          j["size"] = p.size();
          out << j.dump() << "\n";
        }
      } else if (sample_target == "excursion") {
        const Walk w = sample_excursion(sample_size, rng);
        if (sample_format == "walk") {
          out << w.letters() << "\n";
        } else {
          ordered_json j;
          j["kind"] = "excursion";
          j["letters"] = w.letters();
          const auto [x, y] = w.endpoint();
          j["endpoint"] = ordered_json::array({x, y});
          j["size"] = w.length() / 3;
          out << j.dump() << "\n";
        }
      } else {
        const SampledMap s = sample_map(*map_target, sample_size, rng);
        const SpanningTree* tree = s.tree ? &*s.tree : nullptr;
        if (sample_format == "dot") {
          out << map_to_dot(s.map, tree, s.marked);
        } else {
          out << map_to_json(s.map, tree, s.marked) << "\n";
        }
      }
    }
  });

  // depth-trees
  auto* cmd_trees = app.add_subcommand("depth-trees", "List all depth trees of a 2-near-cubic map");
  std::string trees_input;
  cmd_trees->add_option("input", trees_input, "JSON file path, or - for stdin")->required();
  cmd_trees->callback([&] {
    const ParsedMap pm = map_from_json(read_input(trees_input));
    for (const SpanningTree& t : enumerate_depth_trees(pm.map)) {
      out << ordered_json(t.edges()).dump() << "\n";
    }
  });

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Validate a map (and decorations, when present)");
  std::string verify_input;
  bool verify_roundtrip = false;
  cmd_verify->add_option("input", verify_input, "JSON file path, or - for stdin")->required();
  cmd_verify->add_flag("--roundtrip", verify_roundtrip,
                       "also replay the walk and rebuild the map");
  cmd_verify->callback([&] {
    ParsedMap pm = map_from_json(read_input(verify_input));
    ordered_json j;
    j["ok"] = true;
    const MapStats st = stats(pm.map);
    j["vertices"] = st.vertex_count;
    j["edges"] = st.edge_count;
    j["faces"] = st.face_count;
    j["legs"] = st.leg_count;
    if (st.near_cubic_size) {
      j["near_cubic"] = ordered_json::array({st.near_cubic_size->first, st.near_cubic_size->second});
    } else {
      j["near_cubic"] = nullptr;
    }
    if (pm.tree && pm.marked) {
      const MarkedDepthMap m = to_marked_depth(std::move(pm));
      validate_marked_depth_map(m);
      j["validated"] = "marked_depth_map";
      if (verify_roundtrip) {
        const Walk w = map_to_walk(m);
        const MarkedDepthMap back = walk_to_map(w, m.target);
        if (canonical_code(back.map, {&back.tree, back.marked}) !=
            canonical_code(m.map, {&m.tree, m.marked})) {
          throw std::logic_error("roundtrip rebuilt a different map");
        }
        j["roundtrip_walk_length"] = w.length();
      }
    } else {
      if (verify_roundtrip) {
        throw std::invalid_argument("--roundtrip needs tree and marked fields");
      }
      j["validated"] = "map";
    }
    out << j.dump() << "\n";
  });

  // export
  auto* cmd_export = app.add_subcommand("export", "Re-emit a map in another format");
  std::string export_input;
  std::string export_format = "dot";
  cmd_export->add_option("input", export_input, "JSON file path, or - for stdin")->required();
  cmd_export->add_option("--format", export_format, "dot|json (default dot)");
  cmd_export->callback([&] {
    const ParsedMap pm = map_from_json(read_input(export_input));
    const SpanningTree* tree = pm.tree ? &*pm.tree : nullptr;
    if (export_format == "dot") {
      out << map_to_dot(pm.map, tree, pm.marked);
    } else if (export_format == "json") {
      out << map_to_json(pm.map, tree, pm.marked) << "\n";
    } else {
      throw std::invalid_argument("unknown format: " + export_format);
    }
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("kreweras");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace kreweras
