#pragma once

// Brute-force reference implementations over explicit integer windows.
// Nothing here shares code with the library: semigroups are membership
// bitmaps built by dynamic programming and ideals are subsets of a window
// [0, L) closed under adding semigroup elements.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Bits = std::vector<bool>;

inline Bits semigroup(const std::vector<Int>& gens, Int limit) {
  Bits in(static_cast<std::size_t>(limit), false);
  in[0] = true;
  for (Int x = 1; x < limit; ++x) {
    for (Int g : gens) {
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return in;
}

// Any window longer than the Frobenius number works; this bound is crude
// but safe for the small generators used in tests.
inline Int safe_limit(const std::vector<Int>& gens) {
  const Int lo = *std::min_element(gens.begin(), gens.end());
  const Int hi = *std::max_element(gens.begin(), gens.end());
  return lo * hi + hi + 1;
}

inline Int frobenius(const std::vector<Int>& gens) {
  const Int limit = safe_limit(gens);
  const Bits h = semigroup(gens, limit);
  Int f = -1;
  for (Int x = 0; x < limit; ++x) {
    if (!h[static_cast<std::size_t>(x)]) f = x;
  }
  return f;
}

inline std::vector<Int> gaps(const std::vector<Int>& gens) {
  const Int limit = safe_limit(gens);
  const Bits h = semigroup(gens, limit);
  std::vector<Int> out;
  for (Int x = 0; x < limit; ++x) {
    if (!h[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

inline std::vector<Int> minimal_generators(const std::vector<Int>& gens) {
  const Int limit = safe_limit(gens);
  const Bits h = semigroup(gens, limit);
  std::vector<Int> out;
  for (Int x = 1; x < limit; ++x) {
    if (!h[static_cast<std::size_t>(x)]) continue;
    bool decomposable = false;
    for (Int y = 1; y < x && !decomposable; ++y) {
      decomposable = h[static_cast<std::size_t>(y)] && h[static_cast<std::size_t>(x - y)];
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

inline std::vector<Int> apery(const std::vector<Int>& gens, Int a) {
  const Int limit = safe_limit(gens) + a;
  const Bits h = semigroup(gens, limit);
  std::vector<Int> out;
  for (Int x = 0; x < limit; ++x) {
    if (h[static_cast<std::size_t>(x)] && (x < a || !h[static_cast<std::size_t>(x - a)])) out.push_back(x);
  }
  return out;
}

inline std::vector<Int> pseudo_frobenius(const std::vector<Int>& gens) {
  const Int limit = 2 * safe_limit(gens);
  const Bits h = semigroup(gens, limit);
  std::vector<Int> out;
  for (Int x : gaps(gens)) {
    bool all = true;
    for (Int s = 1; s + x < limit && all; ++s) {
      if (h[static_cast<std::size_t>(s)] && !h[static_cast<std::size_t>(x + s)]) all = false;
    }
    if (all) out.push_back(x);
  }
  return out;
}

// An ideal restricted to the window [0, limit).
struct Window {
  Bits h;
  Int limit;
};

inline Bits ideal(const Window& w, const std::vector<Int>& vals) {
  Bits out(static_cast<std::size_t>(w.limit), false);
  for (Int v : vals) {
    for (Int x = v; x < w.limit; ++x) {
      if (w.h[static_cast<std::size_t>(x - v)]) out[static_cast<std::size_t>(x)] = true;
    }
  }
  return out;
}

inline Bits product(const Bits& a, const Bits& b) {
  const std::size_t n = a.size();
  Bits out(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; x + y < n; ++y) {
      if (b[y]) out[x + y] = true;
    }
  }
  return out;
}

inline Bits meet(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

inline Bits join(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

// l(outer / inner) for inner inside outer, both cofinite in the window.
inline Int length(const Bits& outer, const Bits& inner) {
  Int n = 0;
  for (std::size_t i = 0; i < outer.size(); ++i) n += outer[i] && !inner[i];
  return n;
}

inline Int count(const Bits& a) { return static_cast<Int>(std::count(a.begin(), a.end(), true)); }

inline std::vector<Int> elements(const Bits& a, Int below) {
  std::vector<Int> out;
  for (Int x = 0; x < below && x < static_cast<Int>(a.size()); ++x) {
    if (a[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

// Every invariant of an ideal I = (u^v : v in vals) with Q = (u^a), a the
// least valuation, computed from explicit powers in one window.
struct Profile {
  std::vector<Int> hf;  // l(A / I^{n+1}), n = 0..top
  Int e0 = 0;
  Int e1 = 0;
  Int r = 0;
  Int n_nilp = 0;
  Int k = 0;
  Int colength = 0;
  std::vector<Int> quotient_lengths;  // l(I^{n+1}/QI^n), n = 1..r
  std::vector<Int> lambda_set;
  bool intersection_equal = false;
  Int stretch_length = 0;
  bool g_cm = true;
  std::vector<Int> h_poly;
};

inline Profile profile(const std::vector<Int>& gens, const std::vector<Int>& vals, Int top) {
  const Int a = *std::min_element(vals.begin(), vals.end());
  const Int conductor = frobenius(gens) + 1;
  // Everything at or above (top + 2) a + conductor lies in I^{top+2}.
  const Int limit = (top + 2) * a + conductor + *std::max_element(vals.begin(), vals.end()) + 1;
  Window w{semigroup(gens, limit), limit};
  const Bits unit = w.h;
  const Bits i1 = ideal(w, vals);
  const Bits q = ideal(w, {a});
  std::vector<Bits> pow{unit, i1};
  while (static_cast<Int>(pow.size()) <= top + 2) pow.push_back(product(pow.back(), i1));
  auto qi = [&](Int n) { return product(q, pow[static_cast<std::size_t>(n)]); };

  Profile p;
  p.e0 = a;
  p.colength = length(unit, i1);
  for (Int n = 0; n <= top; ++n) p.hf.push_back(length(unit, pow[static_cast<std::size_t>(n + 1)]));
  p.e1 = a * (top + 1) - p.hf.back();
  p.r = -1;
  for (Int n = 0; n <= top + 1; ++n) {
    if (pow[static_cast<std::size_t>(n + 1)] == qi(n)) {
      p.r = n;
      break;
    }
  }
  p.n_nilp = -1;
  for (Int n = 0; n <= top + 1; ++n) {
    if (meet(pow[static_cast<std::size_t>(n + 1)], q) == pow[static_cast<std::size_t>(n + 1)]) {
      p.n_nilp = n;
      break;
    }
  }
  p.k = length(pow[2], qi(1)) + 1;
  for (Int n = 1; n <= p.r; ++n) p.quotient_lengths.push_back(length(pow[static_cast<std::size_t>(n + 1)], qi(n)));
  for (Int n = 1; n <= p.r; ++n) {
    if (meet(qi(n - 1), pow[static_cast<std::size_t>(n + 1)]) != qi(n)) p.lambda_set.push_back(n);
    if (meet(pow[static_cast<std::size_t>(n + 1)], q) != qi(n)) p.g_cm = false;
  }
  p.intersection_equal = meet(q, pow[2]) == qi(1);
  p.stretch_length = length(join(q, pow[2]), join(q, pow[3]));
  std::vector<Int> delta;
  for (Int n = 0; n <= top; ++n) {
    delta.push_back(length(pow[static_cast<std::size_t>(n)], pow[static_cast<std::size_t>(n + 1)]));
  }
  for (std::size_t i = 0; i < delta.size(); ++i) p.h_poly.push_back(delta[i] - (i ? delta[i - 1] : 0));
  while (!p.h_poly.empty() && p.h_poly.back() == 0) p.h_poly.pop_back();
  return p;
}

}  // namespace oracle
