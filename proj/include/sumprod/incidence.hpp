#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sumprod/countmap.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/parallel.hpp"
#include "sumprod/set.hpp"

namespace sumprod {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) noexcept {
    return a.x == b.x && a.y == b.y;
  }
  friend bool point_less(const Point& a, const Point& b) noexcept {
    int c = cmp(a.x, b.x);
    if (c) return c < 0;
    return cmp(a.y, b.y) < 0;
  }
};

// Deduplicated planar point set with exact rational coordinates.
class PointSet {
public:
  PointSet() = default;

  explicit PointSet(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return point_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts_ = std::move(pts);
  }

  // Cartesian grid X x Y, built in sorted order directly.
  static PointSet grid(const RSet& xs, const RSet& ys) {
    PointSet p;
    p.pts_.reserve(xs.size() * ys.size());
    for (const auto& x : xs)
      for (const auto& y : ys) p.pts_.push_back(Point{x, y});
    return p;
  }

  std::size_t size() const noexcept { return pts_.size(); }
  bool empty() const noexcept { return pts_.empty(); }
  const Point& operator[](std::size_t i) const noexcept { return pts_[i]; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  bool contains(const Point& p) const noexcept {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p,
                               [](const Point& a, const Point& b) { return point_less(a, b); });
    return it != pts_.end() && *it == p;
  }

  bool operator==(const PointSet& o) const noexcept { return pts_ == o.pts_; }

private:
  std::vector<Point> pts_;
};

// Line x - lambda*y = c.
struct Line {
  Rational lambda;
  Rational c;
};

// Family of lines grouped by lambda with disjoint-union semantics: the same
// geometric line listed under two lambda labels counts twice, so
// |family| = Sum_lambda |group_lambda|.
class LineFamily {
public:
  void add_group(Rational lambda, std::vector<Rational> cs) {
    std::sort(cs.begin(), cs.end(), [](const Rational& a, const Rational& b) {
      return cmp(a, b) < 0;
    });
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    groups_.emplace_back(std::move(lambda), std::move(cs));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const auto& [l, cs] : groups_) n += cs.size();
    return n;
  }
  const std::vector<std::pair<Rational, std::vector<Rational>>>& groups() const noexcept {
    return groups_;
  }

private:
  std::vector<std::pair<Rational, std::vector<Rational>>> groups_;
};

// pi_lambda(x, y) = x - lambda*y over a point set.
inline RSet project(const Rational& lambda, const PointSet& pts) {
  std::vector<Rational> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.x - lambda * p.y);
  return RSet(std::move(out));
}

inline bool lambda_in_quotient(const RSet& a, const Rational& lambda) {
  if (lambda.is_zero()) return false;
  for (const auto& x : a)
    if (a.contains(lambda * x)) return true;
  return false;
}

// Q_lambda = A x A_lambda - Delta_lambda(A_lambda), the point cloud
// {(a - lambda*t, s - t) : a in A, s,t in A_lambda}.
inline PointSet q_lambda(const RSet& a, const Rational& lambda,
                         std::size_t pair_budget = kDefaultPairBudget) {
  if (a.contains_zero()) throw_precondition("0 in A for q_lambda");
  if (lambda.is_zero()) throw_precondition("q_lambda with lambda = 0");
  RSet fib = fiber(a, lambda);
  std::size_t combos = a.size() * fib.size() * fib.size();
  if (combos > pair_budget) throw_budget("q_lambda construction exceeds budget");
  std::vector<Point> pts;
  pts.reserve(combos);
  for (const auto& t : fib) {
    Rational lt = lambda * t;
    for (const auto& x : a) {
      Rational px = x - lt;
      for (const auto& s : fib) pts.push_back(Point{px, s - t});
    }
  }
  return PointSet(std::move(pts));
}

// One line per distinct projection value of each target set.
inline LineFamily build_line_family(
    const std::vector<std::pair<Rational, PointSet>>& targets) {
  LineFamily fam;
  for (const auto& [lambda, pts] : targets) {
    RSet cs = project(lambda, pts);
    fam.add_group(lambda, std::vector<Rational>(cs.begin(), cs.end()));
  }
  return fam;
}

// Exact incidence count I(P, L) with multiplicity across lambda groups.
inline BigInt incidences(const PointSet& pts, const LineFamily& fam) {
  if (pts.empty() || fam.groups().empty()) throw_precondition("empty incidence input");
  BigInt total;
  for (const auto& [lambda, cs] : fam.groups()) {
    unsigned threads = pts.size() > 4096 ? std::min<unsigned>(thread_count(), 8) : 1;
    std::vector<uint64_t> partial(threads, 0);
    parallel_chunks(
        pts.size(),
        [&](unsigned ci, std::size_t lo, std::size_t hi) {
          uint64_t local = 0;
          for (std::size_t i = lo; i < hi; ++i) {
            Rational v = pts[i].x - lambda * pts[i].y;
            auto it = std::lower_bound(
                cs.begin(), cs.end(), v,
                [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; });
            if (it != cs.end() && *it == v) ++local;
          }
          partial[ci] = local;
        },
        threads);
    for (unsigned i = 0; i < threads; ++i) total += BigInt(partial[i]);
  }
  return total;
}

inline std::string to_json(const PointSet& pts) {
  std::string out = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ',';
    out += "{\"x\":\"" + pts[i].x.to_string() + "\",\"y\":\"" + pts[i].y.to_string() + "\"}";
  }
  out += "]";
  return out;
}

inline std::string to_json(const LineFamily& fam) {
  std::string out = "[";
  bool first = true;
  for (const auto& [lambda, cs] : fam.groups()) {
    if (!first) out += ',';
    first = false;
    out += "{\"lambda\":\"" + lambda.to_string() + "\",\"c\":[";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) out += ',';
      out += "\"" + cs[i].to_string() + "\"";
    }
    out += "]}";
  }
  out += "]";
  return out;
}

enum class TripleAlgo { automatic, brute, energy_form, slope_sort };

namespace detail {

// Canonical slope/product key with 128-bit magnitudes.
struct Key128 {
  unsigned __int128 num;
  unsigned __int128 den;
  bool neg;
  friend bool operator==(const Key128& a, const Key128& b) noexcept {
    return a.num == b.num && a.den == b.den && a.neg == b.neg;
  }
};

inline uint64_t mix64(uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t key128_hash(const Key128& k) noexcept {
  uint64_t h = mix64(static_cast<uint64_t>(k.num)) ^ mix64(static_cast<uint64_t>(k.num >> 64) * 3);
  h ^= mix64(static_cast<uint64_t>(k.den) + 0x517cc1b727220a95ULL);
  h ^= mix64(static_cast<uint64_t>(k.den >> 64) * 7);
  return k.neg ? ~h : h;
}

// Open-addressing counter reused across points; cleared by epoch.
struct FlatCounter {
  struct Entry {
    Key128 key;
    uint32_t epoch = 0;
    uint32_t c1 = 0;
    uint32_t c2 = 0;
  };
  std::vector<Entry> table;
  std::vector<uint32_t> touched;
  uint32_t epoch = 0;
  std::size_t mask = 0;

  void reset(std::size_t expected) {
    std::size_t want = 16;
    while (want < expected * 2) want <<= 1;
    if (table.size() != want) {
      table.assign(want, Entry{});
      mask = want - 1;
      epoch = 1;
    } else {
      ++epoch;
      if (epoch == 0) {
        table.assign(want, Entry{});
        epoch = 1;
      }
    }
    touched.clear();
  }

  Entry& slot(const Key128& k) {
    std::size_t i = key128_hash(k) & mask;
    for (;;) {
      Entry& e = table[i];
      if (e.epoch != epoch) {
        e.key = k;
        e.epoch = epoch;
        e.c1 = 0;
        e.c2 = 0;
        touched.push_back(static_cast<uint32_t>(i));
        return e;
      }
      if (e.key == k) return e;
      i = (i + 1) & mask;
    }
  }
};

// Canonical small fraction (int64 parts).
struct SmallFrac {
  int64_t num;
  uint64_t den;
};

inline uint64_t abs_u64(int64_t v) noexcept {
  return v < 0 ? ~static_cast<uint64_t>(v) + 1ULL : static_cast<uint64_t>(v);
}

inline bool small_fracs(const std::vector<Rational>& vals, std::vector<SmallFrac>& out) {
  out.clear();
  out.reserve(vals.size());
  for (const auto& v : vals) {
    if (!v.fits_small()) return false;
    out.push_back(SmallFrac{v.small_num(), v.small_den()});
  }
  return true;
}

// dy/dx as a canonical Key128; components must be canonical small fractions.
inline Key128 quotient_key(const SmallFrac& dy, const SmallFrac& dx) noexcept {
  uint64_t ny = abs_u64(dy.num);
  uint64_t nx = abs_u64(dx.num);
  uint64_t g1 = BigInt::gcd_u64(ny, nx);
  uint64_t g2 = BigInt::gcd_u64(dy.den, dx.den);
  unsigned __int128 num = static_cast<unsigned __int128>(ny / g1) * (dx.den / g2);
  unsigned __int128 den = static_cast<unsigned __int128>(dy.den / g2) * (nx / g1);
  return Key128{num, den, (dy.num < 0) != (dx.num < 0)};
}

// a*b as a canonical Key128.
inline Key128 product_key(const SmallFrac& a, const SmallFrac& b) noexcept {
  if (a.num == 0 || b.num == 0) return Key128{0, 1, false};
  uint64_t na = abs_u64(a.num);
  uint64_t nb = abs_u64(b.num);
  uint64_t g1 = BigInt::gcd_u64(na, b.den);
  uint64_t g2 = BigInt::gcd_u64(nb, a.den);
  unsigned __int128 num = static_cast<unsigned __int128>(na / g1) * (nb / g2);
  unsigned __int128 den = static_cast<unsigned __int128>(a.den / g2) * (b.den / g1);
  return Key128{num, den, (a.num < 0) != (b.num < 0)};
}

} // namespace detail

struct TripleBudget {
  // |A| * |B| * |C| ceiling
  uint64_t max_product = 128ULL * 128ULL * 128ULL;
};

// Brute-force determinant scan over all ordered grid triples.
inline BigInt collinear_triples_brute(const RSet& A, const RSet& B, const RSet& C) {
  BigInt count;
  for (const auto& p1 : A)
    for (const auto& p2 : A)
      for (const auto& q1 : B)
        for (const auto& q2 : B) {
          Rational qx = q1 - p1, qy = q2 - p2;
          for (const auto& r1 : C)
            for (const auto& r2 : C) {
              if ((qx * (r2 - p2) - qy * (r1 - p1)).is_zero()) count += BigInt(1);
            }
        }
  return count;
}

// T(A,B,B) through the translated-set energy identity:
//   T(A,B,B) = Sum_{a1,a2} #{(b1,b2',b1',b2): (b1-a1)(b2'-a2) = (b1'-a1)(b2-a2)},
// each inner count evaluated as a product-multiplicity power sum so zero
// factors need no special case.
inline BigInt collinear_triples_energy(const RSet& A, const RSet& B) {
  std::size_t n = A.size(), m = B.size();
  // delta lists B - a for every a
  std::vector<std::vector<Rational>> deltas(n);
  for (std::size_t i = 0; i < n; ++i) {
    deltas[i].reserve(m);
    for (const auto& b : B) deltas[i].push_back(b - A[i]);
  }
  std::vector<std::vector<detail::SmallFrac>> small(n);
  bool all_small = true;
  for (std::size_t i = 0; i < n && all_small; ++i) {
    small[i].reserve(m);
    for (const auto& d : deltas[i]) {
      if (!d.fits_small()) {
        all_small = false;
        break;
      }
      small[i].push_back(detail::SmallFrac{d.small_num(), d.small_den()});
    }
  }

  unsigned threads = (n * n * m * m > (std::size_t(1) << 18))
                         ? std::min<unsigned>(thread_count(), 8)
                         : 1;
  std::vector<BigInt> partial(threads);
  parallel_chunks(
      n,
      [&](unsigned ci, std::size_t lo, std::size_t hi) {
        detail::FlatCounter counter;
        std::unordered_map<Rational, uint32_t, RationalHash> generic;
        for (std::size_t i = lo; i < hi; ++i) {
          for (std::size_t j = i; j < n; ++j) {
            uint64_t e2;
            if (all_small) {
              counter.reset(m * m);
              for (const auto& u : small[i])
                for (const auto& v : small[j]) counter.slot(detail::product_key(u, v)).c1++;
              unsigned __int128 s = 0;
              for (uint32_t t : counter.touched) {
                uint64_t c = counter.table[t].c1;
                s += static_cast<unsigned __int128>(c) * c;
              }
              e2 = static_cast<uint64_t>(s);
            } else {
              generic.clear();
              for (const auto& u : deltas[i])
                for (const auto& v : deltas[j]) generic[u * v]++;
              uint64_t s = 0;
              for (const auto& [w, c] : generic) s += static_cast<uint64_t>(c) * c;
              e2 = s;
            }
            // ordered (a1,a2) and (a2,a1) contribute equally
            partial[ci] += BigInt(e2) * BigInt(i == j ? 1 : 2);
          }
        }
      },
      threads);
  BigInt total;
  for (auto& p : partial) total += p;
  return total;
}

// General T(A,B,C) by joining, around every grid point of A x A, the slope
// multiplicities toward B x B and C x C.
inline BigInt collinear_triples_slopes(const RSet& A, const RSet& B, const RSet& C) {
  bool bc_same = B == C;
  std::size_t n = A.size();
  BigInt nb2 = BigInt(B.size()) * BigInt(B.size());
  BigInt nc2 = BigInt(C.size()) * BigInt(C.size());

  // delta lists per A-element: B - a (and C - a when distinct)
  std::vector<std::vector<Rational>> db(n), dc;
  for (std::size_t i = 0; i < n; ++i) {
    db[i].reserve(B.size());
    for (const auto& b : B) db[i].push_back(b - A[i]);
  }
  if (!bc_same) {
    dc.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      dc[i].reserve(C.size());
      for (const auto& c : C) dc[i].push_back(c - A[i]);
    }
  }
  auto& dcr = bc_same ? db : dc;

  std::vector<std::vector<detail::SmallFrac>> sb(n), sc;
  bool all_small = true;
  for (std::size_t i = 0; i < n && all_small; ++i)
    all_small = detail::small_fracs(db[i], sb[i]);
  if (!bc_same) {
    sc.resize(n);
    for (std::size_t i = 0; i < n && all_small; ++i)
      all_small = detail::small_fracs(dcr[i], sc[i]);
  }
  auto& scr = bc_same ? sb : sc;

  unsigned threads =
      (n * n * (B.size() * B.size() + C.size() * C.size()) > (std::size_t(1) << 18))
          ? std::min<unsigned>(thread_count(), 8)
          : 1;
  std::vector<BigInt> partial(threads);
  parallel_chunks(
      n,
      [&](unsigned ci, std::size_t lo, std::size_t hi) {
        detail::FlatCounter counter;
        std::unordered_map<Rational, std::pair<uint32_t, uint32_t>, RationalHash> generic;
        for (std::size_t i = lo; i < hi; ++i) {
          bool px_in_b = B.contains(A[i]);
          bool px_in_c = C.contains(A[i]);
          for (std::size_t j = 0; j < n; ++j) {
            bool py_in_b = B.contains(A[j]);
            bool py_in_c = C.contains(A[j]);
            bool p_in_b2 = px_in_b && py_in_b;
            bool p_in_c2 = px_in_c && py_in_c;
            BigInt contrib;
            if (p_in_b2) contrib += nc2;
            if (p_in_c2) contrib += nb2;
            if (p_in_b2 && p_in_c2) contrib -= BigInt(1);
            // vertical and horizontal lines through p
            uint64_t vert_b = px_in_b ? B.size() - (py_in_b ? 1 : 0) : 0;
            uint64_t vert_c = px_in_c ? C.size() - (py_in_c ? 1 : 0) : 0;
            uint64_t horiz_b = py_in_b ? B.size() - (px_in_b ? 1 : 0) : 0;
            uint64_t horiz_c = py_in_c ? C.size() - (px_in_c ? 1 : 0) : 0;
            unsigned __int128 sum = static_cast<unsigned __int128>(vert_b) * vert_c +
                                    static_cast<unsigned __int128>(horiz_b) * horiz_c;
            if (all_small) {
              counter.reset(B.size() * B.size() + (bc_same ? 0 : C.size() * C.size()));
              for (const auto& dx : sb[i]) {
                if (dx.num == 0) continue;
                for (const auto& dy : sb[j]) {
                  if (dy.num == 0) continue;
                  counter.slot(detail::quotient_key(dy, dx)).c1++;
                }
              }
              if (bc_same) {
                for (uint32_t t : counter.touched) {
                  uint64_t c = counter.table[t].c1;
                  sum += static_cast<unsigned __int128>(c) * c;
                }
              } else {
                for (const auto& dx : scr[i]) {
                  if (dx.num == 0) continue;
                  for (const auto& dy : scr[j]) {
                    if (dy.num == 0) continue;
                    counter.slot(detail::quotient_key(dy, dx)).c2++;
                  }
                }
                for (uint32_t t : counter.touched) {
                  const auto& e = counter.table[t];
                  sum += static_cast<unsigned __int128>(e.c1) * e.c2;
                }
              }
            } else {
              generic.clear();
              for (const auto& dx : db[i]) {
                if (dx.is_zero()) continue;
                for (const auto& dy : db[j]) {
                  if (dy.is_zero()) continue;
                  generic[dy / dx].first++;
                }
              }
              if (bc_same) {
                for (const auto& [s, c] : generic)
                  sum += static_cast<unsigned __int128>(c.first) * c.first;
              } else {
                for (const auto& dx : dcr[i]) {
                  if (dx.is_zero()) continue;
                  for (const auto& dy : dcr[j]) {
                    if (dy.is_zero()) continue;
                    generic[dy / dx].second++;
                  }
                }
                for (const auto& [s, c] : generic)
                  sum += static_cast<unsigned __int128>(c.first) * c.second;
              }
            }
            contrib += BigInt::from_u128(sum);
            partial[ci] += contrib;
          }
        }
      },
      threads);
  BigInt total;
  for (auto& p : partial) total += p;
  return total;
}

// Ordered collinear triples from A x A, B x B, C x C under the
// determinant-vanishing convention (coincident points count).
inline BigInt collinear_triples(const RSet& A, const RSet& B, const RSet& C,
                                TripleAlgo algo = TripleAlgo::automatic,
                                TripleBudget budget = {}) {
  if (A.empty() || B.empty() || C.empty()) throw_precondition("empty set in triple count");
  uint64_t work = static_cast<uint64_t>(A.size()) * B.size() * C.size();
  if (work > budget.max_product)
    throw_budget("triple count |A||B||C| = " + std::to_string(work) + " exceeds budget " +
                 std::to_string(budget.max_product));
  switch (algo) {
    case TripleAlgo::brute:
      return collinear_triples_brute(A, B, C);
    case TripleAlgo::energy_form:
      if (!(B == C)) throw_precondition("energy form requires B = C");
      return collinear_triples_energy(A, B);
    case TripleAlgo::slope_sort:
      return collinear_triples_slopes(A, B, C);
    case TripleAlgo::automatic:
      break;
  }
  if (B == C && !(A == B)) return collinear_triples_energy(A, B);
  return collinear_triples_slopes(A, B, C);
}

} // namespace sumprod
