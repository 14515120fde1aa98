#include "numsgp/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

namespace numsgp {

namespace {

std::atomic<Value> g_max_conductor{kDefaultMaxConductor};

std::string list_to_string(std::span<const Value> values) {
  std::string out = "<";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + ">";
}

// Shortest path over residues mod m: dist[r] is the least element of <gens>
// congruent to r. Aborts once an element would push the conductor past cap.
std::vector<Value> apery_by_shortest_paths(std::span<const Value> gens, Value cap) {
  const Value m = gens.front();
  std::vector<Value> dist(static_cast<std::size_t>(m), -1);
  std::vector<std::uint8_t> done(static_cast<std::size_t>(m), 0);
  using Item = std::pair<Value, Value>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [d, r] = queue.top();
    queue.pop();
    const auto ri = static_cast<std::size_t>(r);
    if (done[ri]) continue;
    done[ri] = 1;
    // conductor = max(Ap) - m + 1 must stay below cap
    if (d - m + 1 >= cap) {
      throw Error(ErrorCode::TooLarge, "conductor of " + list_to_string(gens) +
                                           " exceeds the configured cap " + std::to_string(cap));
    }
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const Value nd = d + gens[i];
      const auto nr = static_cast<std::size_t>(nd % m);
      if (!done[nr] && (dist[nr] < 0 || nd < dist[nr])) {
        dist[nr] = nd;
        queue.emplace(nd, static_cast<Value>(nr));
      }
    }
  }
  return dist;
}

}  // namespace

Value max_conductor() noexcept { return g_max_conductor.load(std::memory_order_relaxed); }

void set_max_conductor(Value cap) {
  if (cap < 2) throw Error(ErrorCode::InvalidArgument, "conductor cap must be at least 2");
  g_max_conductor.store(cap, std::memory_order_relaxed);
}

std::vector<Value> AperyTable::sorted() const {
  std::vector<Value> out = entries_;
  std::sort(out.begin(), out.end());
  return out;
}

Semigroup::Semigroup() : generators_{1}, apery_({0}) {}

namespace {

struct Parts {
  std::vector<Value> generators;
  std::vector<Value> apery;
  Value genus = 0;
};

// Derives the canonical data from the membership table below the conductor.
// `candidates` must contain a generating set of the semigroup.
Parts derive(const std::vector<std::uint8_t>& members, std::span<const Value> candidates) {
  Parts p;
  const auto c = static_cast<Value>(members.size());
  auto in_s = [&](Value n) { return n >= c || (n >= 0 && members[static_cast<std::size_t>(n)]); };

  Value m = 1;
  while (!in_s(m)) ++m;

  p.apery.assign(static_cast<std::size_t>(m), 0);
  for (Value r = 1; r < m; ++r) {
    Value n = r;
    while (!in_s(n)) n += m;
    p.apery[static_cast<std::size_t>(r)] = n;
  }
  p.genus = static_cast<Value>(std::count(members.begin(), members.end(), std::uint8_t{0}));

  // A minimal generator other than m is an Apery element that is not the
  // sum of two nonzero Apery elements.
  p.generators.push_back(m);
  std::vector<Value> sorted_candidates(candidates.begin(), candidates.end());
  std::sort(sorted_candidates.begin(), sorted_candidates.end());
  sorted_candidates.erase(std::unique(sorted_candidates.begin(), sorted_candidates.end()),
                          sorted_candidates.end());
  for (const Value w : sorted_candidates) {
    if (w <= m || !in_s(w) || p.apery[static_cast<std::size_t>(w % m)] != w) continue;
    bool decomposable = false;
    for (Value r = 1; r < m && !decomposable; ++r) {
      const Value w1 = p.apery[static_cast<std::size_t>(r)];
      decomposable = w1 < w && in_s(w - w1);
    }
    if (!decomposable) p.generators.push_back(w);
  }
  return p;
}

std::vector<std::uint8_t> trimmed(std::vector<std::uint8_t> members) {
  while (!members.empty() && members.back()) members.pop_back();
  return members;
}

}  // namespace

Semigroup::Semigroup(std::vector<std::uint8_t> members) : members_(trimmed(std::move(members))) {
  if (members_.empty()) {
    generators_ = {1};
    apery_ = AperyTable({0});
    return;
  }
  // Every minimal generator lies in Ap(S) u {m}.
  Value m = 1;
  while (!contains(m)) ++m;
  std::vector<Value> candidates;
  candidates.reserve(static_cast<std::size_t>(m));
  for (Value r = 1; r < m; ++r) {
    Value n = r;
    while (!contains(n)) n += m;
    candidates.push_back(n);
  }
  Parts p = derive(members_, candidates);
  generators_ = std::move(p.generators);
  apery_ = AperyTable(std::move(p.apery));
  genus_ = p.genus;
}

Semigroup Semigroup::from_generators(std::span<const Value> generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyInput, "empty generator list");
  std::vector<Value> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() < 1) {
    throw Error(ErrorCode::InvalidArgument, "generators must be positive integers");
  }
  Value g = 0;
  for (const Value a : gens) g = std::gcd(g, a);
  if (g != 1) {
    throw Error(ErrorCode::NonCoprime,
                "gcd" + list_to_string(gens) + " = " + std::to_string(g) + " is not 1");
  }
  if (gens.front() == 1) return Semigroup();

  const Value cap = max_conductor();
  // conductor >= m for every S != N
  if (gens.front() >= cap) {
    throw Error(ErrorCode::TooLarge, "multiplicity exceeds the configured conductor cap " +
                                         std::to_string(cap));
  }
  const Value m = gens.front();
  // Anything at or above cap + m is redundant once the conductor is below cap.
  std::erase_if(gens, [&](Value a) { return a - m >= cap; });
  const std::vector<Value> apery = apery_by_shortest_paths(gens, cap);
  if (std::find(apery.begin(), apery.end(), Value{-1}) != apery.end()) {
    throw Error(ErrorCode::TooLarge, "conductor exceeds the configured cap " + std::to_string(cap));
  }
  const Value conductor = *std::max_element(apery.begin(), apery.end()) - m + 1;

  std::vector<std::uint8_t> members(static_cast<std::size_t>(conductor), 0);
  for (Value n = 0; n < conductor; ++n) {
    members[static_cast<std::size_t>(n)] = n >= apery[static_cast<std::size_t>(n % m)];
  }

  Semigroup s;
  s.members_ = std::move(members);
  Parts p = derive(s.members_, gens);
  s.generators_ = std::move(p.generators);
  s.apery_ = AperyTable(std::move(p.apery));
  s.genus_ = p.genus;
  return s;
}

Semigroup Semigroup::from_gaps(std::span<const Value> gaps) {
  if (gaps.empty()) return Semigroup();
  const Value frob = *std::max_element(gaps.begin(), gaps.end());
  if (*std::min_element(gaps.begin(), gaps.end()) < 1) {
    throw Error(ErrorCode::InvalidArgument, "gaps must be positive integers");
  }
  if (frob + 1 >= max_conductor()) {
    throw Error(ErrorCode::TooLarge, "conductor exceeds the configured cap");
  }
  std::vector<std::uint8_t> members(static_cast<std::size_t>(frob + 1), 1);
  for (const Value g : gaps) members[static_cast<std::size_t>(g)] = 0;
  for (Value x = 1; x <= frob; ++x) {
    if (!members[static_cast<std::size_t>(x)]) continue;
    for (Value y = x; x + y <= frob; ++y) {
      if (members[static_cast<std::size_t>(y)] && !members[static_cast<std::size_t>(x + y)]) {
        throw Error(ErrorCode::InvalidArgument,
                    "complement of the gap set is not additively closed: " + std::to_string(x) +
                        " + " + std::to_string(y));
      }
    }
  }
  return Semigroup(std::move(members));
}

std::vector<Value> Semigroup::gaps() const {
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Value n = 1; n < conductor(); ++n) {
    if (!members_[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

std::vector<Value> Semigroup::sporadic_elements() const {
  if (is_trivial()) throw Error(ErrorCode::IsTrivial, "N has no Frobenius number");
  std::vector<Value> out;
  for (Value n = 0; n < frobenius(); ++n) {
    if (members_[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

std::vector<Value> Semigroup::pseudo_frobenius() const {
  if (is_trivial()) throw Error(ErrorCode::IsTrivial, "N has no pseudo-Frobenius elements");
  // p + a_i in S for every minimal generator implies p + S_+ in S.
  std::vector<Value> out;
  for (Value p = 1; p < conductor(); ++p) {
    if (contains(p)) continue;
    const bool pf = std::all_of(generators_.begin(), generators_.end(),
                                [&](Value a) { return contains(p + a); });
    if (pf) out.push_back(p);
  }
  return out;
}

Value Semigroup::type_number() const { return static_cast<Value>(pseudo_frobenius().size()); }

bool Semigroup::is_symmetric() const {
  if (is_trivial()) throw Error(ErrorCode::IsTrivial, "symmetry is undefined for N");
  return frobenius() + 1 == 2 * genus_;
}

bool Semigroup::is_symmetric_by_reflection() const {
  if (is_trivial()) throw Error(ErrorCode::IsTrivial, "symmetry is undefined for N");
  // outside [0, F] exactly one of n, F - n is negative and the other exceeds F
  const Value f = frobenius();
  for (Value n = 0; n <= f; ++n) {
    if (contains(n) == contains(f - n)) return false;
  }
  return true;
}

Semigroup Semigroup::with_generator_removed(Value a) const {
  if (!std::binary_search(generators_.begin(), generators_.end(), a)) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(a) + " is not a minimal generator of " + list_to_string(generators_));
  }
  const Value c = std::max(conductor(), a + 1);
  std::vector<std::uint8_t> members(static_cast<std::size_t>(c), 1);
  std::copy(members_.begin(), members_.end(), members.begin());
  members[static_cast<std::size_t>(a)] = 0;

  // S \ {a} is generated by the other generators, a + b for those, 2a and 3a.
  std::vector<Value> candidates;
  candidates.reserve(2 * generators_.size() + 2);
  for (const Value b : generators_) {
    if (b == a) continue;
    candidates.push_back(b);
    candidates.push_back(a + b);
  }
  candidates.push_back(2 * a);
  candidates.push_back(3 * a);

  Semigroup s;
  s.members_ = trimmed(std::move(members));
  Parts p = derive(s.members_, candidates);
  s.generators_ = std::move(p.generators);
  s.apery_ = AperyTable(std::move(p.apery));
  s.genus_ = p.genus;
  return s;
}

Semigroup Semigroup::with_element_added(Value n) const {
  if (n <= 0 || contains(n)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(n) + " is not a gap");
  }
  const bool closed = contains(2 * n) && std::all_of(generators_.begin(), generators_.end(),
                                                     [&](Value a) { return contains(n + a); });
  if (!closed) {
    throw Error(ErrorCode::InvalidArgument,
                "adding " + std::to_string(n) + " to " + list_to_string(generators_) +
                    " does not give a semigroup");
  }
  std::vector<std::uint8_t> members = members_;
  members[static_cast<std::size_t>(n)] = 1;

  std::vector<Value> candidates(generators_.begin(), generators_.end());
  candidates.push_back(n);

  Semigroup s;
  s.members_ = trimmed(std::move(members));
  if (s.members_.empty()) return Semigroup();
  Parts p = derive(s.members_, candidates);
  s.generators_ = std::move(p.generators);
  s.apery_ = AperyTable(std::move(p.apery));
  s.genus_ = p.genus;
  return s;
}

std::size_t SemigroupHash::operator()(const Semigroup& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Value a : s.min_generators()) {
    h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace numsgp
