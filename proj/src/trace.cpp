#include "raag/trace.hpp"

#include <algorithm>

namespace raag {

MonoidWord parse_monoid_word(const std::vector<std::string>& names,
                             const IndependenceAlphabet& alpha) {
  MonoidWord w;
  w.reserve(names.size());
  for (const auto& s : names) {
    const int g = alpha.index_of(s);
    if (g < 0) {
      throw InvalidInput("unknown letter '" + s + "'");
    }
    w.push_back(g);
  }
  return w;
}

std::vector<std::string> format_monoid_word(const MonoidWord& w,
                                            const IndependenceAlphabet& alpha) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (int g : w) {
    out.push_back(alpha.name(g));
  }
  return out;
}

TraceNormalForm foata_normal_form(const MonoidWord& w,
                                  const IndependenceAlphabet& alpha) {
  const int n = static_cast<int>(alpha.size());
  // Highest step index holding each generator so far (0 = none).
  std::vector<std::size_t> last(n, 0);
  TraceNormalForm steps;
  for (int g : w) {
    if (g < 0 || g >= n) {
      throw InvalidInput("letter out of range");
    }
    std::size_t level = 0;
    for (int h = 0; h < n; ++h) {
      if (h == g || !alpha.independent(g, h)) {
        level = std::max(level, last[h]);
      }
    }
    ++level;
    last[g] = level;
    if (steps.size() < level) {
      steps.resize(level);
    }
    steps[level - 1].push_back(g);
  }
  for (auto& step : steps) {
    std::sort(step.begin(), step.end(), [&](int a, int b) {
      return alpha.name_rank(a) < alpha.name_rank(b);
    });
  }
  return steps;
}

MonoidWord linearize(const TraceNormalForm& steps) {
  MonoidWord w;
  for (const auto& step : steps) {
    w.insert(w.end(), step.begin(), step.end());
  }
  return w;
}

bool traces_equal(const MonoidWord& u, const MonoidWord& v,
                  const IndependenceAlphabet& alpha) {
  return u.size() == v.size() &&
         foata_normal_form(u, alpha) == foata_normal_form(v, alpha);
}

MonoidWord project(const MonoidWord& w, int x, int y,
                   const IndependenceAlphabet& alpha) {
  if (x != y && alpha.independent(x, y)) {
    throw InvalidInput("projection pair must be dependent");
  }
  MonoidWord out;
  std::copy_if(w.begin(), w.end(), std::back_inserter(out),
               [&](int g) { return g == x || g == y; });
  return out;
}

}  // namespace raag
