#include "epsnet/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "epsnet/complexity.hpp"
#include "epsnet/random.hpp"

namespace epsnet {
namespace {

using i128 = __int128;

struct P2 {
  i128 x = 0;
  i128 y = 0;
};

struct P3 {
  i128 x = 0;
  i128 y = 0;
  i128 z = 0;
};

i128 cross(const P2& o, const P2& a, const P2& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

i128 dot(const P2& o, const P2& a, const P2& b) { return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y); }

int sign(i128 v) { return (v > 0) - (v < 0); }

// > 0 when d is strictly inside the circle through a, b, c given counterclockwise.
i128 incircle(const P2& a, const P2& b, const P2& c, const P2& d) {
  const i128 adx = a.x - d.x, ady = a.y - d.y;
  const i128 bdx = b.x - d.x, bdy = b.y - d.y;
  const i128 cdx = c.x - d.x, cdy = c.y - d.y;
  const i128 ad = adx * adx + ady * ady;
  const i128 bd = bdx * bdx + bdy * bdy;
  const i128 cd = cdx * cdx + cdy * cdy;
  return ad * (bdx * cdy - cdx * bdy) - bd * (adx * cdy - cdx * ady) + cd * (adx * bdy - bdx * ady);
}

P3 sub(const P3& a, const P3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
P3 cross3(const P3& a, const P3& b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
i128 dot3(const P3& a, const P3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
bool is_zero(const P3& a) { return a.x == 0 && a.y == 0 && a.z == 0; }
i128 abs128(i128 v) { return v < 0 ? -v : v; }

class TraceSet {
 public:
  explicit TraceSet(std::size_t n) : n_(n) {}
  void add(PointSet s) {
    if (!s.empty()) seen_.insert(std::move(s));
  }
  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::vector<PointSet> take() const { return {seen_.begin(), seen_.end()}; }

 private:
  std::size_t n_;
  std::unordered_set<PointSet, PointSetHash> seen_;
};

// Closed-halfplane traces of distinct planar points (full set included, empty
// set not). A boundary through two points p, q separates the strictly-left
// points, and the points on the line are cut at any position along it.
std::vector<PointSet> halfplane_traces(const std::vector<P2>& pts) {
  const std::size_t s = pts.size();
  TraceSet out(s);
  out.add(PointSet::full(s));
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < s; ++q) {
      if (p == q) continue;
      PointSet left(s);
      std::vector<std::size_t> on;
      for (std::size_t r = 0; r < s; ++r) {
        const i128 c = cross(pts[p], pts[q], pts[r]);
        if (c > 0) left.set(r);
        if (c == 0) on.push_back(r);
      }
      std::sort(on.begin(), on.end(), [&](std::size_t a, std::size_t b) {
        return dot(pts[p], pts[q], pts[a]) < dot(pts[p], pts[q], pts[b]);
      });
      PointSet prefix = left;
      out.add(prefix);
      for (auto r : on) {
        prefix.set(r);
        out.add(prefix);
      }
      PointSet suffix = left;
      for (auto it = on.rbegin(); it != on.rend(); ++it) {
        suffix.set(*it);
        out.add(suffix);
      }
    }
  return out.take();
}

// Adds base ∪ S for every closed-halfplane cut S of the local points `on`
// (empty cut included).
void add_with_cuts(TraceSet& out, const PointSet& base, const std::vector<std::size_t>& on, const std::vector<P2>& proj) {
  out.add(base);
  for (const auto& cut : halfplane_traces(proj)) {
    PointSet t = base;
    cut.for_each([&](std::size_t j) { t.set(on[j]); });
    out.add(std::move(t));
  }
}

std::vector<PointSet> interval_traces(const std::vector<std::int64_t>& xs) {
  const std::size_t s = xs.size();
  std::vector<std::size_t> order(s);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<PointSet> out;
  for (std::size_t a = 0; a < s; ++a) {
    PointSet run(s);
    for (std::size_t b = a; b < s; ++b) {
      run.set(order[b]);
      out.push_back(run);
    }
  }
  return out;
}

std::vector<PointSet> disk_traces(const std::vector<P2>& pts) {
  const std::size_t s = pts.size();
  TraceSet out(s);
  out.add(PointSet::full(s));
  for (std::size_t p = 0; p < s; ++p) out.add(PointSet(s, {p}));

  // Circles through three or more points: strictly inside plus any cut of the
  // cocircular points. Each circle is handled once, from its three smallest members.
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      for (std::size_t c = b + 1; c < s; ++c) {
        const int orient = sign(cross(pts[a], pts[b], pts[c]));
        if (orient == 0) continue;
        PointSet inside(s);
        std::vector<std::size_t> on;
        bool first = true;
        for (std::size_t r = 0; r < s; ++r) {
          const int v = sign(incircle(pts[a], pts[b], pts[c], pts[r])) * orient;
          if (v > 0) inside.set(r);
          if (v == 0) {
            if (r < c && r != a && r != b) first = false;
            on.push_back(r);
          }
        }
        if (!first) continue;
        std::vector<P2> proj;
        for (auto r : on) proj.push_back(pts[r]);
        add_with_cuts(out, inside, on, proj);
      }

  // Circles through exactly two points p, q: the center moves along the
  // bisector and each off-line point r enters at one parameter t_r = alpha/beta.
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = p + 1; q < s; ++q) {
      const P2 v{-(pts[q].y - pts[p].y), pts[q].x - pts[p].x};
      PointSet fixed(s);
      struct Event {
        std::size_t r;
        i128 alpha;
        i128 beta;  // > 0; t_r = alpha / beta
        bool increasing;
        std::size_t rank = 0;
      };
      std::vector<Event> events;
      for (std::size_t r = 0; r < s; ++r) {
        if (r == p || r == q) continue;
        const i128 rx = pts[r].x - pts[p].x, ry = pts[r].y - pts[p].y;
        const i128 beta = 2 * (v.x * rx + v.y * ry);
        if (beta == 0) {
          // on line pq: inside exactly when strictly between p and q
          const i128 t = dot(pts[p], pts[q], pts[r]);
          const i128 len = dot(pts[p], pts[q], pts[q]);
          if (t > 0 && t < len) fixed.set(r);
          continue;
        }
        const i128 alpha = (pts[r].x * pts[r].x + pts[r].y * pts[r].y) - (pts[p].x * pts[p].x + pts[p].y * pts[p].y) -
                           ((pts[p].x + pts[q].x) * rx + (pts[p].y + pts[q].y) * ry);
        // r is inside when alpha - t beta <= 0
        events.push_back(beta > 0 ? Event{r, alpha, beta, true} : Event{r, -alpha, -beta, false});
      }
      auto less = [](const Event& a, const Event& b) { return a.alpha * b.beta < b.alpha * a.beta; };
      std::vector<Event> values = events;
      std::sort(values.begin(), values.end(), less);
      values.erase(std::unique(values.begin(), values.end(),
                               [&](const Event& a, const Event& b) { return !less(a, b) && !less(b, a); }),
                   values.end());
      for (auto& e : events)
        e.rank = static_cast<std::size_t>(std::upper_bound(values.begin(), values.end(), e, less) - values.begin());
      // interval j lies just above the j-th distinct value (j = 0: below all)
      for (std::size_t j = 0; j <= values.size(); ++j) {
        PointSet inside = fixed;
        for (const auto& e : events)
          if (e.increasing ? e.rank <= j : e.rank > j) inside.set(e.r);
        for (int mask = 0; mask < 4; ++mask) {
          PointSet t = inside;
          if (mask & 1) t.set(p);
          if (mask & 2) t.set(q);
          out.add(std::move(t));
        }
      }
    }
  return out.take();
}

std::vector<P2> project_plane(const std::vector<P3>& pts, const std::vector<std::size_t>& idx, const P3& normal) {
  const i128 ax = abs128(normal.x), ay = abs128(normal.y), az = abs128(normal.z);
  std::vector<P2> out;
  for (auto i : idx) {
    const auto& p = pts[i];
    if (az >= ax && az >= ay)
      out.push_back({p.x, p.y});
    else if (ay >= ax)
      out.push_back({p.x, p.z});
    else
      out.push_back({p.y, p.z});
  }
  return out;
}

std::vector<PointSet> halfspace_traces(const std::vector<P3>& pts) {
  const std::size_t s = pts.size();
  TraceSet out(s);
  out.add(PointSet::full(s));
  bool planar_found = false;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      for (std::size_t c = b + 1; c < s; ++c) {
        const P3 normal = cross3(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
        if (is_zero(normal)) continue;
        planar_found = true;
        PointSet above(s), below(s);
        std::vector<std::size_t> on;
        for (std::size_t r = 0; r < s; ++r) {
          const int v = sign(dot3(normal, sub(pts[r], pts[a])));
          if (v > 0) above.set(r);
          if (v < 0) below.set(r);
          if (v == 0) on.push_back(r);
        }
        // handle each plane once: a, b its two smallest points, c the smallest
        // point of the plane off the line ab
        if (on[0] != a || on[1] != b) continue;
        bool first = true;
        for (auto r : on) {
          if (r >= c) break;
          if (r != a && r != b && !is_zero(cross3(sub(pts[b], pts[a]), sub(pts[r], pts[a])))) first = false;
        }
        if (!first) continue;
        const auto proj = project_plane(pts, on, normal);
        add_with_cuts(out, above, on, proj);
        add_with_cuts(out, below, on, proj);
      }
  if (!planar_found && s >= 2) {
    // all points on one line: drop the axis along which the line moves least
    const P3 d = sub(pts[1], pts[0]);
    const P3 n{abs128(d.x) <= abs128(d.y) && abs128(d.x) <= abs128(d.z) ? 1 : 0,
               abs128(d.y) < abs128(d.x) && abs128(d.y) <= abs128(d.z) ? 1 : 0,
               abs128(d.z) < abs128(d.x) && abs128(d.z) < abs128(d.y) ? 1 : 0};
    std::vector<std::size_t> all(s);
    std::iota(all.begin(), all.end(), 0);
    for (auto& t : halfplane_traces(project_plane(pts, all, n))) out.add(std::move(t));
  }
  return out.take();
}

void check_coordinate(std::int64_t c) {
  if (c > kMaxCoordinate || c < -kMaxCoordinate)
    throw std::invalid_argument("coordinate " + std::to_string(c) + " exceeds the supported range");
}

}  // namespace

std::size_t lower_bound_point_count(const LowerBoundParams& p) {
  return p.l * p.m * (p.d - 1) + p.l * p.k * ((std::size_t{1} << p.m) - 1);
}

std::uint64_t lower_bound_range_count(const LowerBoundParams& p) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < p.m; ++i) {
    const std::uint64_t size = p.k << i;
    total += p.l * binomial(size + p.d - 1, size);
  }
  return total;
}

bool lower_bound_premise(const LowerBoundParams& p) {
  const std::size_t n = lower_bound_point_count(p);
  const std::size_t base = p.l * p.k * (std::size_t{1} << p.m);
  return base < n && n < 2 * base;
}

Rational lower_bound_eps(const LowerBoundParams& p) {
  return Rational(static_cast<std::int64_t>(p.k), static_cast<std::int64_t>(lower_bound_point_count(p)));
}

RangeSpace gen_lower_bound_family(const LowerBoundParams& p, std::uint64_t cap) {
  if (p.k < 1 || p.d < 1 || p.l < 1 || p.m < 1) throw std::invalid_argument("k, d, l, m must all be at least 1");
  if (p.m > 20) throw CapExceeded("lower-bound family limited to m <= 20");
  const std::uint64_t count = lower_bound_range_count(p);
  if (count > cap)
    throw CapExceeded("lower-bound family would have " + std::to_string(count) + " ranges, cap " + std::to_string(cap));
  const std::size_t n = lower_bound_point_count(p);
  std::vector<PointSet> ranges;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < p.m; ++i) {
    const std::size_t size = p.k << i;
    const std::size_t block = size + p.d - 1;
    for (std::size_t j = 0; j < p.l; ++j) {
      // all size-subsets of the block, via a combination counter
      std::vector<std::size_t> comb(size);
      std::iota(comb.begin(), comb.end(), 0);
      while (true) {
        PointSet r(n);
        for (auto c : comb) r.set(offset + c);
        ranges.push_back(std::move(r));
        std::size_t t = size;
        while (t > 0 && comb[t - 1] == block - size + t - 1) --t;
        if (t == 0) break;
        ++comb[t - 1];
        for (std::size_t u = t; u < size; ++u) comb[u] = comb[u - 1] + 1;
      }
      offset += block;
    }
  }
  const std::string name = "lower-bound-k" + std::to_string(p.k) + "-d" + std::to_string(p.d) + "-l" +
                           std::to_string(p.l) + "-m" + std::to_string(p.m);
  return RangeSpace::build(n, uniform_weights(n), std::move(ranges), name);
}

std::string to_string(GeometryKind k) {
  switch (k) {
    case GeometryKind::intervals: return "intervals";
    case GeometryKind::halfplanes: return "halfplanes";
    case GeometryKind::disks: return "disks";
    case GeometryKind::halfspaces3d: return "halfspaces3d";
  }
  return "unknown";
}

std::optional<GeometryKind> parse_geometry_kind(std::string_view text) {
  for (auto k : {GeometryKind::intervals, GeometryKind::halfplanes, GeometryKind::disks, GeometryKind::halfspaces3d})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

std::size_t geometry_dimension(GeometryKind k) {
  switch (k) {
    case GeometryKind::intervals: return 1;
    case GeometryKind::halfplanes:
    case GeometryKind::disks: return 2;
    case GeometryKind::halfspaces3d: return 3;
  }
  return 0;
}

RangeSpace gen_geometric(GeometryKind kind, const Coordinates& points, std::vector<std::int64_t> weights,
                         std::string name) {
  const std::size_t dim = geometry_dimension(kind);
  const std::size_t n = points.size();
  for (const auto& p : points) {
    if (p.size() != dim)
      throw std::invalid_argument(to_string(kind) + " needs points of dimension " + std::to_string(dim));
    for (auto c : p) check_coordinate(c);
  }
  if (weights.empty()) weights = uniform_weights(n);

  // distinct locations; coincident points share every trace
  std::map<std::vector<std::int64_t>, std::size_t> location_of;
  std::vector<std::vector<std::int64_t>> locations;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = location_of.emplace(points[i], locations.size());
    if (inserted) {
      locations.push_back(points[i]);
      members.emplace_back();
    }
    members[it->second].push_back(i);
  }

  std::vector<PointSet> local;
  switch (kind) {
    case GeometryKind::intervals: {
      std::vector<std::int64_t> xs;
      for (const auto& l : locations) xs.push_back(l[0]);
      local = interval_traces(xs);
      break;
    }
    case GeometryKind::halfplanes:
    case GeometryKind::disks: {
      std::vector<P2> pts;
      for (const auto& l : locations) pts.push_back({l[0], l[1]});
      local = kind == GeometryKind::halfplanes ? halfplane_traces(pts) : disk_traces(pts);
      break;
    }
    case GeometryKind::halfspaces3d: {
      std::vector<P3> pts;
      for (const auto& l : locations) pts.push_back({l[0], l[1], l[2]});
      local = halfspace_traces(pts);
      break;
    }
  }

  std::vector<PointSet> ranges;
  ranges.reserve(local.size());
  for (const auto& t : local) {
    PointSet r(n);
    t.for_each([&](std::size_t loc) {
      for (auto i : members[loc]) r.set(i);
    });
    ranges.push_back(std::move(r));
  }
  if (name.empty()) name = to_string(kind) + "-" + std::to_string(n);
  return RangeSpace::build(n, std::move(weights), std::move(ranges), std::move(name));
}

Coordinates random_points(std::size_t count, std::size_t dim, std::int64_t coord_max, std::uint64_t seed) {
  if (coord_max < 0 || coord_max > kMaxCoordinate) throw std::invalid_argument("coordinate bound out of range");
  Rng rng(seed);
  Coordinates out(count, std::vector<std::int64_t>(dim));
  for (auto& p : out)
    for (auto& c : p) c = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(coord_max) + 1));
  return out;
}

Coordinates parse_points_csv(std::string_view text) {
  Coordinates out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::int64_t> row;
    while (true) {
      const auto comma = line.find(',');
      std::string_view field = line.substr(0, comma);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
        throw std::invalid_argument("bad coordinate on line " + std::to_string(line_no));
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string to_string(SizeLaw s) {
  switch (s) {
    case SizeLaw::uniform: return "uniform";
    case SizeLaw::geometric: return "geometric";
    case SizeLaw::fixed: return "fixed";
  }
  return "unknown";
}

std::optional<SizeLaw> parse_size_law(std::string_view text) {
  for (auto s : {SizeLaw::uniform, SizeLaw::geometric, SizeLaw::fixed})
    if (to_string(s) == text) return s;
  return std::nullopt;
}

std::string to_string(WeightLaw w) { return w == WeightLaw::ones ? "ones" : "uniform"; }

std::optional<WeightLaw> parse_weight_law(std::string_view text) {
  if (text == "ones") return WeightLaw::ones;
  if (text == "uniform") return WeightLaw::uniform;
  return std::nullopt;
}

RangeSpace gen_random(const RandomSpec& spec, std::uint64_t seed, std::string name) {
  if (spec.n < 1) throw std::invalid_argument("random instances need n >= 1");
  if (spec.size_law == SizeLaw::fixed && (spec.fixed_size < 1 || spec.fixed_size > spec.n))
    throw std::invalid_argument("fixed range size must lie in 1..n");
  if (spec.weight_law == WeightLaw::uniform && spec.w_max < 1) throw std::invalid_argument("w_max must be >= 1");
  Rng rng(seed);
  std::vector<std::int64_t> weights(spec.n, 1);
  if (spec.weight_law == WeightLaw::uniform)
    for (auto& w : weights) w = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(spec.w_max)));

  std::vector<std::size_t> pool(spec.n);
  std::vector<PointSet> ranges;
  for (std::size_t r = 0; r < spec.num_ranges; ++r) {
    std::size_t size = 1;
    switch (spec.size_law) {
      case SizeLaw::uniform: size = 1 + static_cast<std::size_t>(rng.below(spec.n)); break;
      case SizeLaw::fixed: size = spec.fixed_size; break;
      case SizeLaw::geometric:
        // P(s) proportional to 2^-s on 1..n: resample fair-coin runs that overshoot
        do {
          size = 1;
          while (size <= spec.n && rng.below(2) == 1) ++size;
        } while (size > spec.n);
        break;
    }
    std::iota(pool.begin(), pool.end(), 0);
    PointSet set(spec.n);
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(spec.n - i));
      std::swap(pool[i], pool[j]);
      set.set(pool[i]);
    }
    ranges.push_back(std::move(set));
  }
  if (name.empty()) name = "random-n" + std::to_string(spec.n) + "-s" + std::to_string(seed);
  return RangeSpace::build(spec.n, std::move(weights), std::move(ranges), std::move(name));
}

}  // namespace epsnet
