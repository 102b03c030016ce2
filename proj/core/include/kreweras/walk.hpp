#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace kreweras {

/// Word over the step alphabet {a, b, c}.
///
/// Read as a quarter-plane walk from the origin: a is a West step (-1, 0),
/// b a South step (0, -1) and c a North-East step (+1, +1).
class Walk {
public:
  Walk() = default;

  /// Parses an ASCII word; any symbol outside {a, b, c} is rejected.
  static Walk parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::int64_t count_a() const { return na_; }
  std::int64_t count_b() const { return nb_; }
  std::int64_t count_c() const { return nc_; }

  /// Endpoint (nc - na, nc - nb) reached from the origin.
  std::pair<std::int64_t, std::int64_t> endpoint() const { return {nc_ - na_, nc_ - nb_}; }

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk& x, const Walk& y) { return x.letters_ <=> y.letters_; }

private:
  explicit Walk(std::string letters);

  std::string letters_;
  std::int64_t na_ = 0;
  std::int64_t nb_ = 0;
  std::int64_t nc_ = 0;
};

/// Step-by-step and endpoint predicates for a walk.
///
/// kreweras_target is the i >= 0 such that the word is a Kreweras walk (one
/// that stays in the quarter plane) ending at (i, 0), when such an i exists.
/// size is defined when the endpoint lies on the line i+j = 0 (then length/3)
/// or on the positive i-axis (then the number of a-steps).
struct WalkClassification {
  bool is_meander = false;
  bool is_excursion = false;
  bool kreweras_prefix_ok = false;
  bool is_kreweras_to_origin = false;
  std::optional<std::int64_t> kreweras_target;
  std::optional<std::int64_t> size;
};

WalkClassification classify(const Walk& w);

/// One-dimensional walk with steps c = +2 and a merged down step of -1.
///
/// The down step is stored as the letter 'a' and rendered as alpha by
/// display(). Construction enforces nonnegative partial sums and a zero total.
class ProjectedWalk {
public:
  ProjectedWalk() = default;

  /// letters must be over {a, c}; throws if the ballot conditions fail.
  explicit ProjectedWalk(std::string letters);

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::int64_t size() const { return nc_; }

  /// UTF-8 rendering with the down step written as the Greek letter alpha.
  std::string display() const;

  friend bool operator==(const ProjectedWalk&, const ProjectedWalk&) = default;
  friend auto operator<=>(const ProjectedWalk& x, const ProjectedWalk& y) {
    return x.letters_ <=> y.letters_;
  }

private:
  std::string letters_;
  std::int64_t nc_ = 0;
};

/// Collapses a and b steps of an excursion to the merged down step.
/// Throws if w is not an excursion.
ProjectedWalk project(const Walk& w);

}  // namespace kreweras
