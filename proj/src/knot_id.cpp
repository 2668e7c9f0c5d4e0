#include "cubeknot/knot_id.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "cubeknot/legendrian.hpp"
#include "cubeknot/lifting.hpp"

namespace cubeknot {

namespace {

int sgn(int v) { return (v > 0) - (v < 0); }

enum Slot { N = 0, S = 1, E = 2, W = 3 };

// Planar data for the state sum: the knot is cut at its crossing passages
// into m = 2c edges; edge e runs from passage e to passage e+1. For every
// crossing, slot[N|S|E|W] holds the edge-end that leaves it in that
// direction, encoded as 2*edge + (0 = tail, 1 = head).
struct Passages {
  int crossings = 0;
  int edges = 0;
  std::vector<std::array<int, 4>> slot;
  std::vector<int> order;  // crossings by first passage
};

Passages build_passages(const GridDiagram& g) {
  if (!is_valid_grid(g) || component_count(g) != 1) throw GridError("bracket: input must be a valid knot grid");
  const auto cr = crossings(g);
  const int c = static_cast<int>(cr.size());
  if (c > kMaxBracketCrossings) throw GridError("bracket: crossing budget exceeded");
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < c; ++i) index[{cr[static_cast<std::size_t>(i)].pos.col, cr[static_cast<std::size_t>(i)].pos.row}] = i;

  struct Event {
    int crossing;
    Slot in, out;
  };
  std::vector<Event> events;
  for (int r = 0, step = 0; step < g.size(); ++step, r = g.next_bend(r)) {
    const int ocol = g.o_col(r), xcol = g.x_col(r);
    const int hdir = sgn(xcol - ocol);
    for (int col = ocol + hdir; col != xcol; col += hdir)
      if (auto it = index.find({col, r}); it != index.end())
        events.push_back({it->second, hdir > 0 ? W : E, hdir > 0 ? E : W});
    const int end = g.next_bend(r);
    const int vdir = sgn(end - r);
    for (int row = r + vdir; row != end; row += vdir)
      if (auto it = index.find({xcol, row}); it != index.end())
        events.push_back({it->second, vdir > 0 ? S : N, vdir > 0 ? N : S});
  }

  Passages p;
  p.crossings = c;
  p.edges = static_cast<int>(events.size());
  p.slot.assign(static_cast<std::size_t>(c), {-1, -1, -1, -1});
  std::vector<char> seen(static_cast<std::size_t>(c), 0);
  const int m = p.edges;
  for (int e = 0; e < m; ++e) {
    const auto& ev = events[static_cast<std::size_t>(e)];
    auto& s = p.slot[static_cast<std::size_t>(ev.crossing)];
    s[ev.in] = 2 * ((e + m - 1) % m) + 1;  // head of the arriving edge
    s[ev.out] = 2 * e;                     // tail of the leaving edge
    if (!seen[static_cast<std::size_t>(ev.crossing)]) {
      seen[static_cast<std::size_t>(ev.crossing)] = 1;
      p.order.push_back(ev.crossing);
    }
  }
  return p;
}

// Vertical strand over: the A-smoothing joins N-E and S-W.
constexpr std::array<std::array<Slot, 4>, 2> kSmoothing = {{{N, E, S, W}, {N, W, S, E}}};

const LaurentPoly& delta() {
  static const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  return d;
}

// Exact division by delta = -A^-2 (1 + A^4).
LaurentPoly divide_by_delta(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  std::map<int, std::int64_t> q;  // p / (1 + A^4)
  const int lo = p.terms().begin()->first;
  const int hi = p.terms().rbegin()->first;
  for (int e = lo; e <= hi - 4; ++e) {
    auto prev = q.find(e - 4);
    const std::int64_t v = p.coeff(e) - (prev == q.end() ? 0 : prev->second);
    if (v != 0) q[e] = v;
  }
  LaurentPoly r;
  for (const auto& [e, c] : q) r.add_term(-c, e + 2);
  if (r * delta() != p) throw std::logic_error("bracket: state sum not divisible by delta");
  return r;
}

}  // namespace

LaurentPoly kauffman_bracket_plain(const GridDiagram& g) {
  const Passages p = build_passages(g);
  if (p.crossings == 0) return LaurentPoly::one();
  const int m = p.edges;
  // Loop counts are tallied per (A-count, loops) and expanded once at the end.
  std::map<std::pair<int, int>, std::int64_t> tally;
  std::vector<int> parent(static_cast<std::size_t>(m));
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << p.crossings); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = m;
    int a_count = 0;
    for (int x = 0; x < p.crossings; ++x) {
      const int which = static_cast<int>((state >> x) & 1);
      a_count += which == 0;
      const auto& sl = p.slot[static_cast<std::size_t>(x)];
      const auto& sm = kSmoothing[static_cast<std::size_t>(which)];
      for (int k = 0; k < 4; k += 2) {
        const int u = find(sl[sm[static_cast<std::size_t>(k)]] / 2);
        const int v = find(sl[sm[static_cast<std::size_t>(k + 1)]] / 2);
        if (u != v) {
          parent[static_cast<std::size_t>(u)] = v;
          --loops;
        }
      }
    }
    ++tally[{a_count, loops}];
  }
  LaurentPoly total;
  for (const auto& [key, mult] : tally) {
    const auto [a_count, loops] = key;
    LaurentPoly term = LaurentPoly::monomial(mult, 2 * a_count - p.crossings);
    for (int i = 1; i < loops; ++i) term *= delta();
    total += term;
  }
  return total;
}

LaurentPoly kauffman_bracket_memo(const GridDiagram& g) {
  const Passages p = build_passages(g);
  if (p.crossings == 0) return LaurentPoly::one();
  // State: partner map over open edge-ends sitting at unprocessed crossings.
  // Every closed loop contributes a factor delta; one is divided out at the end.
  using State = std::vector<std::pair<int, int>>;
  std::map<State, LaurentPoly> states{{State{}, LaurentPoly::one()}};
  for (int x : p.order) {
    std::map<State, LaurentPoly> next;
    for (const auto& [state, poly] : states) {
      for (int which = 0; which < 2; ++which) {
        std::map<int, int> partner(state.begin(), state.end());
        const auto& sl = p.slot[static_cast<std::size_t>(x)];
        // Open every slot at x that is not yet an endpoint of a path.
        for (int s = 0; s < 4; ++s) {
          const int end = sl[static_cast<std::size_t>(s)];
          if (partner.count(end)) continue;
          const int other = end ^ 1;
          partner[end] = other;
          partner[other] = end;
        }
        int closed = 0;
        const auto& sm = kSmoothing[static_cast<std::size_t>(which)];
        for (int k = 0; k < 4; k += 2) {
          const int a = sl[sm[static_cast<std::size_t>(k)]];
          const int b = sl[sm[static_cast<std::size_t>(k + 1)]];
          const int pa = partner.at(a), pb = partner.at(b);
          partner.erase(a);
          partner.erase(b);
          if (pa == b) {
            ++closed;
          } else {
            partner[pa] = pb;
            partner[pb] = pa;
          }
        }
        LaurentPoly term = poly * LaurentPoly::monomial(1, which == 0 ? 1 : -1);
        for (int i = 0; i < closed; ++i) term *= delta();
        next[State(partner.begin(), partner.end())] += term;
      }
    }
    states = std::move(next);
  }
  if (states.size() != 1 || !states.begin()->first.empty()) throw std::logic_error("bracket: unclosed state");
  return divide_by_delta(states.begin()->second);
}

LaurentPoly kauffman_bracket(const GridDiagram& g) {
  const int c = static_cast<int>(crossings(g).size());
  return c <= kPlainStateSumLimit ? kauffman_bracket_plain(g) : kauffman_bracket_memo(g);
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int w) {
  // V = (-A^3)^(-w) <K>, then t = A^-4, i.e. q = t^(1/2) = A^-2.
  const LaurentPoly factor = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return (factor * bracket).divide_exponents(-2);
}

LaurentPoly jones(const GridDiagram& g) { return jones_from_bracket(kauffman_bracket(g), writhe(g)); }

std::string jones_t_string(const LaurentPoly& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : v.terms()) {
    std::string mono;
    const std::string exp = e % 2 == 0 ? std::to_string(e / 2) : std::to_string(e) + "/2";
    if (e == 0) mono = std::to_string(c < 0 ? -c : c);
    else mono = (c == 1 || c == -1 ? "" : std::to_string(c < 0 ? -c : c)) + "t^" + exp;
    if (s.empty()) s = (c < 0 ? "-" : "") + mono;
    else s += (c < 0 ? " - " : " + ") + mono;
  }
  return s;
}

GridDiagram canonical_kmin_grid(int p) {
  if (p < 3 || p % 2 == 0) throw GridError("canonical_kmin_grid: p must be odd and at least 3");
  const int n = p + 2;
  std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    x[static_cast<std::size_t>(r)] = (r + 2) % n;
    o[static_cast<std::size_t>(r)] = r;
  }
  return {std::move(x), std::move(o)};
}

GridDiagram canonical_kmax_grid(int p) {
  if (p < 3 || p % 2 == 0) throw GridError("canonical_kmax_grid: p must be odd and at least 3");
  const int n = p + 2;
  std::vector<int> x(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    x[static_cast<std::size_t>(r)] = (r + n - 2) % n;
    o[static_cast<std::size_t>(r)] = r;
  }
  return {std::move(x), std::move(o)};
}

CubeDiagram kmax_cube(int p) {
  static std::mutex mu;
  static std::map<int, CubeDiagram> cache;
  const auto g = canonical_kmax_grid(p);
  std::lock_guard lock(mu);
  if (auto it = cache.find(p); it != cache.end()) return it->second;
  auto cube = find_lift(g);
  if (!cube) throw std::logic_error("kmax_cube: canonical K_max grid has no lift; the minimal-size construction failed");
  cache.emplace(p, *cube);
  return *cube;
}

std::vector<LegendrianClassSpec> legendrian_classes(int p) {
  if (p < 3 || p % 2 == 0) throw GridError("legendrian_classes: p must be odd and at least 3");
  std::vector<int> rots;
  for (int t = 0; 2 * t < p - 2; ++t) {
    rots.push_back(p - 2 - 4 * t);
    rots.push_back(-(p - 2 - 4 * t));
  }
  std::sort(rots.begin(), rots.end(), std::greater<>());
  rots.erase(std::unique(rots.begin(), rots.end()), rots.end());
  std::vector<LegendrianClassSpec> out;
  for (int r : rots) out.push_back({p, -2 * p, r});
  return out;
}

}  // namespace cubeknot
