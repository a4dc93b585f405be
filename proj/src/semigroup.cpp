#include "stretchkit/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "stretchkit/error.hpp"

namespace stretchkit {

std::vector<Int> apery_table(std::span<const Int> gens, Int modulus) {
  const auto m = static_cast<std::size_t>(modulus);
  std::vector<Int> dist(m, kUnreachable);
  dist[0] = 0;
  using Entry = std::pair<Int, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, node] = queue.top();
    queue.pop();
    if (d != dist[node]) continue;
    for (Int g : gens) {
      const auto next = (node + static_cast<std::size_t>(g % modulus)) % m;
      if (d + g < dist[next]) {
        dist[next] = d + g;
        queue.emplace(d + g, next);
      }
    }
  }
  return dist;
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    Int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      throw Error(ErrorKind::ParseError,
                  "expected integer at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw Error(ErrorKind::ParseError,
                  "unexpected '" + std::string(1, text[pos]) + "' at position " + std::to_string(pos));
    }
    ++pos;
  }
  return out;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators, std::vector<Int> apery)
    : generators_(std::move(generators)), apery_(std::move(apery)) {
  const Int e = multiplicity();
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - e;
  // Each residue class c contributes (apery[c] - c) / e gaps.
  for (Int c = 0; c < e; ++c) genus_ += (apery_[static_cast<std::size_t>(c)] - c) / e;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
  if (gens.empty()) throw Error(ErrorKind::EmptyGenerators, "no generators given");
  std::vector<Int> sorted(gens.begin(), gens.end());
  for (Int g : sorted) {
    if (g <= 0) throw Error(ErrorKind::InvalidGenerator, "generator " + std::to_string(g) + " is not positive");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Int g = 0;
  for (Int x : sorted) g = std::gcd(g, x);
  if (g != 1) throw Error(ErrorKind::GcdNotOne, "gcd of generators is " + std::to_string(g));

  // A generator is redundant iff it lies in the semigroup spanned by the
  // smaller ones; test against the Apery table of the kept prefix.
  const Int e = sorted.front();
  std::vector<Int> kept{e};
  std::vector<Int> table = apery_table(kept, e);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Int x = sorted[i];
    if (x >= table[static_cast<std::size_t>(x % e)]) continue;
    kept.push_back(x);
    table = apery_table(kept, e);
  }
  return NumericalSemigroup(std::move(kept), std::move(table));
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view literal) {
  auto values = parse_int_list(literal);
  return from_generators(values);
}

bool NumericalSemigroup::contains(Int x) const {
  if (x < 0) return false;
  return x >= apery_[static_cast<std::size_t>(x % multiplicity())];
}

std::vector<Int> NumericalSemigroup::apery_set(Int a) const {
  if (a <= 0 || !contains(a)) throw Error(ErrorKind::NotMember, std::to_string(a) + " is not a positive element of H");
  std::vector<Int> out;
  const Int bound = frobenius_ + a;
  for (Int h = 0; h <= bound; ++h) {
    if (contains(h) && !contains(h - a)) out.push_back(h);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int x = 1; x <= frobenius_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::pseudo_frobenius() const {
  if (frobenius_ < 0) throw Error(ErrorKind::TrivialSemigroup, "H = N has no pseudo-Frobenius numbers");
  std::vector<Int> out;
  for (Int x : gaps()) {
    bool ok = std::all_of(generators_.begin(), generators_.end(), [&](Int g) { return contains(x + g); });
    if (ok) out.push_back(x);
  }
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ',';
    os << generators_[i];
  }
  return os.str();
}

SemigroupPtr make_semigroup(std::span<const Int> gens) {
  return std::make_shared<const NumericalSemigroup>(NumericalSemigroup::from_generators(gens));
}

SemigroupPtr make_semigroup(std::string_view literal) {
  return std::make_shared<const NumericalSemigroup>(NumericalSemigroup::parse(literal));
}

}  // namespace stretchkit
