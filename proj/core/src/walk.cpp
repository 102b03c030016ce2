#include "kreweras/walk.hpp"

#include <stdexcept>

namespace kreweras {

Walk::Walk(std::string letters) : letters_(std::move(letters)) {
  for (char ch : letters_) {
    switch (ch) {
      case 'a': ++na_; break;
      case 'b': ++nb_; break;
      case 'c': ++nc_; break;
      default:
        throw std::invalid_argument(std::string("walk: unexpected symbol '") + ch +
                                    "', expected letters a, b, c");
    }
  }
}

Walk Walk::parse(std::string_view text) { return Walk(std::string(text)); }

WalkClassification classify(const Walk& w) {
  WalkClassification result;
  const std::string& s = w.letters();

  std::int64_t pa = 0, pb = 0, pc = 0;
  bool quarter_plane = true;  // every prefix has |w'|_a <= |w'|_c and |w'|_b <= |w'|_c
  bool half_plane = true;     // every prefix has |w'|_a + |w'|_b <= 2 |w'|_c
  for (char ch : s) {
    if (ch == 'a') ++pa;
    else if (ch == 'b') ++pb;
    else ++pc;
    if (pa > pc || pb > pc) quarter_plane = false;
    if (pa + pb > 2 * pc) half_plane = false;
  }

  const std::int64_t na = w.count_a(), nb = w.count_b(), nc = w.count_c();
  result.kreweras_prefix_ok = quarter_plane;
  result.is_meander = half_plane;
  result.is_excursion = half_plane && (na + nb == 2 * nc);
  result.is_kreweras_to_origin = quarter_plane && na == nb && nb == nc;

  if (nb == nc && nc >= na) {
    // right-to-left scan: every suffix w' needs |w'|_a + i >= |w'|_c and |w'|_b >= |w'|_c
    const std::int64_t i = nc - na;
    std::int64_t sa = 0, sb = 0, sc = 0;
    bool ok = true;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      if (*it == 'a') ++sa;
      else if (*it == 'b') ++sb;
      else ++sc;
      if (sa + i < sc || sb < sc) {
        ok = false;
        break;
      }
    }
    if (ok) result.kreweras_target = i;
  }

  if (na + nb == 2 * nc) result.size = nc;
  else if (nb == nc && nc > na) result.size = na;

  return result;
}

ProjectedWalk::ProjectedWalk(std::string letters) : letters_(std::move(letters)) {
  std::int64_t sum = 0;
  for (char ch : letters_) {
    if (ch == 'c') {
      sum += 2;
      ++nc_;
    } else if (ch == 'a') {
      sum -= 1;
    } else {
      throw std::invalid_argument("projected walk: letters must be over {a, c}");
    }
    if (sum < 0) throw std::invalid_argument("projected walk: partial sum drops below zero");
  }
  if (sum != 0) throw std::invalid_argument("projected walk: total displacement is not zero");
}

std::string ProjectedWalk::display() const {
  std::string out;
  out.reserve(letters_.size() * 2);
  for (char ch : letters_) {
    if (ch == 'c') out.push_back('c');
    else out += "\xce\xb1";  // U+03B1
  }
  return out;
}

ProjectedWalk project(const Walk& w) {
  if (!classify(w).is_excursion)
    throw std::invalid_argument("project: walk is not an excursion");
  std::string collapsed = w.letters();
  for (char& ch : collapsed)
    if (ch == 'b') ch = 'a';
  return ProjectedWalk(std::move(collapsed));
}

}  // namespace kreweras
