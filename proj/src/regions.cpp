#include "secnc/regions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace secnc::regions {

namespace {

RateRegion from_profile(const net::MinCutProfile& profile,
                        const std::function<Rat(int)>& bound_of) {
  RateRegion r;
  r.m = profile.m;
  for (std::uint32_t mask = 1; mask < (1u << profile.m); ++mask)
    r.constraints.push_back({mask, bound_of(profile.at(mask))});
  return r;
}

}  // namespace

RateRegion secure_outer_bound(const net::MinCutProfile& profile, int k) {
  return from_profile(profile, [k](int cut) { return Rat(std::max(0, cut - k)); });
}

RateRegion unsecure_region(const net::MinCutProfile& profile) {
  return from_profile(profile, [](int cut) { return Rat(cut); });
}

StarProfile star_mincuts(const net::MinCutProfile& profile) {
  int m = profile.m;
  std::uint32_t full = (1u << m) - 1;
  long long total = profile.at(full);

  // Subset sums g(B) = sum of star values over nonempty J ⊆ B.
  std::vector<long long> g(full + 1, 0);
  for (std::uint32_t b = 1; b <= full; ++b)
    g[b] = b == full ? total : total - profile.at(full & ~b);

  StarProfile star;
  star.m = m;
  star.values.assign(full, 0);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t b = 1; b <= full; ++b) masks.push_back(b);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint32_t b : masks) {
    long long acc = g[b];
    // strict nonempty subsets of b
    for (std::uint32_t j = (b - 1) & b; j != 0; j = (j - 1) & b)
      acc -= star.values[j - 1];
    star.values[b - 1] = acc;
  }
  return star;
}

net::MinCutProfile star_to_profile(const StarProfile& star) {
  int m = star.m;
  std::uint32_t full = (1u << m) - 1;
  std::vector<int> vals;
  for (std::uint32_t a = 1; a <= full; ++a) {
    long long sum = 0;
    for (std::uint32_t j = 1; j <= full; ++j)
      if (j & a) sum += star.values[j - 1];
    vals.push_back(static_cast<int>(sum));
  }
  return net::MinCutProfile::from_values(vals);
}

bool is_separable_profile(const StarProfile& star) {
  return std::all_of(star.values.begin(), star.values.end(),
                     [](long long v) { return v >= 0; });
}

RateRegion two_phase_region(const RateRegion& unsecure, int k, int min_single_cut) {
  if (min_single_cut == 0) throw std::invalid_argument("zero min-cut to some destination");
  Rat scale = Rat(min_single_cut - k, min_single_cut);
  if (scale < 0) scale = 0;
  scale.canonicalize();
  RateRegion r;
  r.m = unsecure.m;
  for (const Constraint& c : unsecure.constraints)
    r.constraints.push_back({c.subset, c.bound * scale});
  return r;
}

bool satisfies(const RateRegion& region, const std::vector<Rat>& point) {
  for (const Rat& x : point)
    if (x < 0) return false;
  for (const Constraint& c : region.constraints) {
    Rat sum = 0;
    for (int i = 0; i < region.m; ++i)
      if (c.subset & (1u << i)) sum += point[i];
    if (sum > c.bound) return false;
  }
  return true;
}

namespace {

// Solves the n x n rational system rows * x = rhs; nullopt when singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b) {
  std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    Rat inv = 1 / a[c][c];
    for (std::size_t j = 0; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  return b;
}

}  // namespace

std::vector<std::vector<Rat>> corner_points(const RateRegion& region) {
  int m = region.m;
  if (m > 3) throw std::invalid_argument("corner enumeration limited to 3 rates");

  std::uint32_t covered = 0;
  for (const Constraint& c : region.constraints) covered |= c.subset;
  if (covered != (1u << m) - 1)
    throw std::invalid_argument("region is unbounded in some coordinate");

  // plane pool: every constraint as an equality, plus the axis planes
  std::vector<std::pair<std::vector<Rat>, Rat>> planes;
  for (const Constraint& c : region.constraints) {
    std::vector<Rat> n(m, 0);
    for (int i = 0; i < m; ++i)
      if (c.subset & (1u << i)) n[i] = 1;
    planes.push_back({n, c.bound});
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Rat> n(m, 0);
    n[i] = 1;
    planes.push_back({n, Rat(0)});
  }

  std::vector<std::vector<Rat>> pts;
  std::vector<int> pick(m);
  auto try_point = [&](const std::vector<int>& idx) {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (int i : idx) {
      a.push_back(planes[i].first);
      b.push_back(planes[i].second);
    }
    auto x = solve_square(a, b);
    if (x && satisfies(region, *x)) pts.push_back(*x);
  };

  int np = static_cast<int>(planes.size());
  if (m == 1) {
    for (int i = 0; i < np; ++i) try_point({i});
  } else if (m == 2) {
    for (int i = 0; i < np; ++i)
      for (int j = i + 1; j < np; ++j) try_point({i, j});
  } else {
    for (int i = 0; i < np; ++i)
      for (int j = i + 1; j < np; ++j)
        for (int l = j + 1; l < np; ++l) try_point({i, j, l});
  }

  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool contains(const RateRegion& outer, const RateRegion& inner) {
  for (const auto& pt : corner_points(inner))
    if (!satisfies(outer, pt)) return false;
  return true;
}

Rat max_symmetric_rate(const RateRegion& region) {
  std::optional<Rat> best;
  for (const Constraint& c : region.constraints) {
    int size = std::popcount(c.subset);
    Rat limit = c.bound / size;
    if (!best || limit < *best) best = limit;
  }
  if (!best) throw std::invalid_argument("region has no constraints");
  return *best;
}

std::optional<ButterflyVariant> butterfly_variant_from_string(const std::string& s) {
  if (s == "bf1") return ButterflyVariant::bf1;
  if (s == "single_source") return ButterflyVariant::single_source;
  if (s == "single_dest") return ButterflyVariant::single_dest;
  if (s == "bf2") return ButterflyVariant::bf2;
  return std::nullopt;
}

ButterflyRegions butterfly_regions(const std::array<Rat, 7>& cap, ButterflyVariant v) {
  for (const Rat& c : cap)
    if (c < 0) throw std::invalid_argument("capacities must be nonnegative");
  auto c = [&](int i) { return cap[i - 1]; };  // 1-based, matching link labels
  auto rmin = [](std::initializer_list<Rat> xs) { return std::min(xs); };

  auto region = [](Rat r1, Rat r2, std::optional<Rat> sum) {
    RateRegion reg;
    reg.m = 2;
    reg.constraints.push_back({0b01, r1});
    reg.constraints.push_back({0b10, r2});
    if (sum) reg.constraints.push_back({0b11, *sum});
    return reg;
  };

  ButterflyRegions out;
  switch (v) {
    case ButterflyVariant::bf1:
      out.unsecure = region(rmin({c(1), c(3), c(7)}), rmin({c(2), c(3), c(6)}),
                            c(3) + rmin({c(4), c(5)}));
      out.secure = std::nullopt;
      break;
    case ButterflyVariant::single_source:
      out.unsecure = region(c(5) + rmin({c(1) + c(2), c(3), c(7)}),
                            c(4) + rmin({c(1) + c(2), c(3), c(6)}),
                            c(4) + c(5) + rmin({c(1) + c(2), c(3), c(6) + c(7)}));
      out.secure = region(rmin({c(5), c(1) + c(2), c(3), c(7)}),
                          rmin({c(4), c(1) + c(2), c(3), c(6)}), std::nullopt);
      break;
    case ButterflyVariant::single_dest:
      out.unsecure = region(c(4) + rmin({c(1), c(3), c(6) + c(7)}),
                            c(5) + rmin({c(2), c(3), c(6) + c(7)}),
                            c(4) + c(5) + rmin({c(1) + c(2), c(3), c(6) + c(7)}));
      out.secure = region(rmin({c(1), c(4)}), rmin({c(2), c(5)}),
                          rmin({c(3), c(6) + c(7)}));
      break;
    case ButterflyVariant::bf2:
      out.unsecure = region(c(4) + rmin({c(1), c(3), c(7)}),
                            c(5) + rmin({c(2), c(3), c(6)}), c(4) + c(5) + c(3));
      out.secure = region(rmin({c(4), c(1), c(3), c(7)}),
                          rmin({c(5), c(2), c(3), c(6)}), c(3));
      break;
  }
  return out;
}

std::string subset_to_string(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::string region_json(const RateRegion& region) {
  std::ostringstream out;
  out << "{\"m\": " << region.m << ", \"constraints\": [";
  for (std::size_t i = 0; i < region.constraints.size(); ++i) {
    const Constraint& c = region.constraints[i];
    if (i) out << ", ";
    out << "{\"subset\": [";
    bool first = true;
    for (int b = 0; b < region.m; ++b)
      if (c.subset & (1u << b)) {
        if (!first) out << ", ";
        out << (b + 1);
        first = false;
      }
    out << "], \"bound\": \"" << c.bound.get_str() << "\"}";
  }
  out << "]}";
  return out.str();
}

std::string corners_csv(const RateRegion& region) {
  std::ostringstream out;
  for (int i = 0; i < region.m; ++i) out << (i ? "," : "") << "R" << (i + 1);
  out << "\n";
  for (const auto& pt : corner_points(region)) {
    for (int i = 0; i < region.m; ++i) {
      if (i) out << ",";
      out << pt[i].get_str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace secnc::regions
