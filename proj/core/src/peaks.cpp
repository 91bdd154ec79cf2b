#include "atomsep/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace atomsep {

namespace {

struct RawPeak {
  std::size_t index;
  double prominence;
};

// Classic prominence: height above the higher of the two saddle minima
// toward the nearest higher samples (or the range ends).
double prominence_at(std::span<const double> y, std::size_t i) {
  const double h = y[i];
  double left_min = h;
  for (std::size_t l = i; l-- > 0;) {
    left_min = std::min(left_min, y[l]);
    if (y[l] > h) break;
  }
  double right_min = h;
  for (std::size_t r = i + 1; r < y.size(); ++r) {
    right_min = std::min(right_min, y[r]);
    if (y[r] > h) break;
  }
  return h - std::max(left_min, right_min);
}

Peak refine(std::span<const double> x, std::span<const double> y, std::size_t i,
            double prominence) {
  Peak p;
  p.prominence = prominence;
  p.position = x[i];
  p.height = y[i];
  if (i > 0 && i + 1 < x.size()) {
    // Quadratic through the three samples (handles non-uniform spacing).
    const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
    const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
    const double d1 = (y1 - y0) / (x1 - x0);
    const double d2 = (y2 - y1) / (x2 - x1);
    const double a2 = (d2 - d1) / (x2 - x0);
    if (a2 < 0.0) {
      const double vertex = 0.5 * (x0 + x1) - d1 / (2.0 * a2);
      if (vertex >= x0 && vertex <= x2) {
        p.position = vertex;
        p.height = y0 + d1 * (vertex - x0) + a2 * (vertex - x0) * (vertex - x1);
      }
    }
  }
  // Width from half-prominence crossings, linearly interpolated.
  const double level = y[i] - 0.5 * prominence;
  double left = x.front(), right = x.back();
  for (std::size_t l = i; l-- > 0;) {
    if (y[l] <= level) {
      const double t = (level - y[l]) / (y[l + 1] - y[l]);
      left = x[l] + t * (x[l + 1] - x[l]);
      break;
    }
    if (y[l] > y[i]) {
      left = x[l];
      break;
    }
  }
  for (std::size_t r = i + 1; r < x.size(); ++r) {
    if (y[r] <= level) {
      const double t = (y[r - 1] - level) / (y[r - 1] - y[r]);
      right = x[r - 1] + t * (x[r] - x[r - 1]);
      break;
    }
    if (y[r] > y[i]) {
      right = x[r];
      break;
    }
  }
  p.width_estimate = std::max(0.0, right - left);
  return p;
}

}  // namespace

std::vector<Peak> find_peaks(std::span<const double> x, std::span<const double> y,
                             double min_prominence_rel) {
  std::vector<Peak> out;
  if (x.size() != y.size() || x.size() < 3) {
    return out;
  }
  const double global_max = *std::max_element(y.begin(), y.end());
  if (!(global_max > 0.0)) {
    return out;
  }
  const double threshold = min_prominence_rel * global_max;

  std::vector<RawPeak> raw;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (!(y[i] > y[i - 1])) continue;
    // Plateau tolerant: climb over equal samples, require an eventual drop.
    std::size_t j = i;
    while (j + 1 < y.size() && y[j + 1] == y[i]) ++j;
    if (j + 1 >= y.size() || !(y[j + 1] < y[i])) continue;
    const std::size_t mid = (i + j) / 2;
    const double prom = prominence_at(y, mid);
    if (prom >= threshold) {
      raw.push_back({mid, prom});
    }
    i = j;
  }
  out.reserve(raw.size());
  for (const RawPeak& r : raw) {
    out.push_back(refine(x, y, r.index, r.prominence));
  }
  std::sort(out.begin(), out.end(),
            [](const Peak& a, const Peak& b) { return a.position < b.position; });
  return out;
}

std::vector<Peak> find_peaks(const SpectrumTrace& trace, double min_prominence_rel) {
  return find_peaks(trace.delta, trace.values, min_prominence_rel);
}

std::vector<SidebandGroup> group_adjacent(const std::vector<Peak>& positive_peaks) {
  std::vector<SidebandGroup> groups;
  std::vector<Peak> chain;
  auto flush = [&] {
    if (chain.empty()) return;
    SidebandGroup g;
    g.id = static_cast<int>(groups.size());
    g.members = chain;
    double sum = 0.0;
    for (const Peak& p : chain) {
      sum += p.position;
      g.prominence = std::max(g.prominence, p.prominence);
      g.height = std::max(g.height, p.height);
    }
    g.center = sum / chain.size();
    g.splitting = chain.back().position - chain.front().position;
    groups.push_back(std::move(g));
    chain.clear();
  };
  for (const Peak& p : positive_peaks) {
    if (!chain.empty()) {
      const double prev = chain.back().position;
      const double mid = 0.5 * (prev + p.position);
      if (!(p.position - prev < 0.25 * mid)) {
        flush();
      }
    }
    chain.push_back(p);
  }
  flush();
  return groups;
}

DoubletSet pair_sidebands(const std::vector<Peak>& peaks, double tolerance) {
  DoubletSet set;
  std::vector<Peak> positive, negative;
  for (const Peak& p : peaks) {
    if (std::abs(p.position) <= tolerance) {
      if (!set.central || p.height > set.central->height) {
        if (set.central) set.unpaired.push_back(*set.central);
        set.central = p;
      } else {
        set.unpaired.push_back(p);
      }
    } else if (p.position > 0.0) {
      positive.push_back(p);
    } else {
      negative.push_back(p);
    }
  }

  // Match +nu against -nu, symmetrizing the position.
  std::vector<bool> taken(negative.size(), false);
  std::vector<Peak> matched;
  for (const Peak& p : positive) {
    double best = std::numeric_limits<double>::max();
    std::size_t best_i = negative.size();
    for (std::size_t i = 0; i < negative.size(); ++i) {
      if (taken[i]) continue;
      const double d = std::abs(std::abs(negative[i].position) - p.position);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    if (best_i < negative.size() && best <= tolerance) {
      taken[best_i] = true;
      Peak sym = p;
      sym.position = 0.5 * (p.position + std::abs(negative[best_i].position));
      sym.height = 0.5 * (p.height + negative[best_i].height);
      sym.prominence = 0.5 * (p.prominence + negative[best_i].prominence);
      matched.push_back(sym);
    } else {
      set.unpaired.push_back(p);
    }
  }
  for (std::size_t i = 0; i < negative.size(); ++i) {
    if (!taken[i]) set.unpaired.push_back(negative[i]);
  }

  std::sort(matched.begin(), matched.end(),
            [](const Peak& a, const Peak& b) { return a.position < b.position; });
  set.groups = group_adjacent(matched);
  return set;
}

}  // namespace atomsep
