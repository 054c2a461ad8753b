#include "gotzrep/resolution.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "gotzrep/errors.hpp"
#include "gotzrep/linalg.hpp"

namespace gotzrep {

Integer BettiTable::at(int i, long j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Integer(0) : it->second;
}

void BettiTable::add(int i, long j, const Integer& v) {
  if (v == 0) return;
  auto& slot = entries[{i, j}];
  slot += v;
  if (slot == 0) entries.erase({i, j});
}

std::optional<long> BettiTable::regularity() const {
  std::optional<long> best;
  for (const auto& [key, v] : entries) {
    const long r = key.second - key.first;
    if (!best || r > *best) best = r;
  }
  return best;
}

std::map<long, Integer> BettiTable::euler_characteristic() const {
  std::map<long, Integer> out;
  for (const auto& [key, v] : entries) {
    if (key.first % 2 == 0)
      out[key.second] += v;
    else
      out[key.second] -= v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

// Koszul complex of M in multidegree b: K_i has basis the subsets tau of the
// variables with |tau| = i, tau <= b and x^(b - tau) a basis monomial of M.
class MultidegreeKoszul {
 public:
  MultidegreeKoszul(const MonomialIdeal& ideal, BettiOf which, const std::vector<int>& b)
      : ideal_(ideal), which_(which), b_(b), vars_(static_cast<int>(b.size())) {}

  std::vector<Integer> homology() {
    std::vector<std::vector<unsigned>> basis(static_cast<std::size_t>(vars_ + 1));
    for (unsigned tau = 0; tau < (1u << vars_); ++tau)
      if (in_module(tau)) basis[static_cast<std::size_t>(std::popcount(tau))].push_back(tau);
    // ranks[i] = rank of d_i : K_i -> K_{i-1}
    std::vector<std::size_t> ranks(static_cast<std::size_t>(vars_ + 2), 0);
    for (int i = 1; i <= vars_; ++i) ranks[static_cast<std::size_t>(i)] = differential_rank(basis, i);
    std::vector<Integer> h(static_cast<std::size_t>(vars_ + 1));
    for (int i = 0; i <= vars_; ++i) {
      const auto k = basis[static_cast<std::size_t>(i)].size();
      h[static_cast<std::size_t>(i)] =
          Integer(static_cast<unsigned long>(k - ranks[static_cast<std::size_t>(i)] -
                                             ranks[static_cast<std::size_t>(i + 1)]));
    }
    return h;
  }

 private:
  bool in_module(unsigned tau) const {
    std::vector<int> e(b_);
    for (int v = 0; v < vars_; ++v)
      if (tau & (1u << v)) {
        if (--e[static_cast<std::size_t>(v)] < 0) return false;
      }
    const bool in_ideal = ideal_.contains(Monomial(std::move(e)));
    return which_ == BettiOf::quotient ? !in_ideal : in_ideal;
  }

  std::size_t differential_rank(const std::vector<std::vector<unsigned>>& basis, int i) const {
    const auto& src = basis[static_cast<std::size_t>(i)];
    const auto& dst = basis[static_cast<std::size_t>(i - 1)];
    if (src.empty() || dst.empty()) return 0;
    IntMatrix mat(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      int position = 0;
      for (int v = 0; v < vars_; ++v) {
        if (!(src[c] & (1u << v))) continue;
        const unsigned face = src[c] & ~(1u << v);
        auto it = std::find(dst.begin(), dst.end(), face);
        if (it != dst.end())
          mat(static_cast<std::size_t>(it - dst.begin()), c) = (position % 2 == 0) ? 1 : -1;
        ++position;
      }
    }
    return exact_rank(mat);
  }

  const MonomialIdeal& ideal_;
  BettiOf which_;
  std::vector<int> b_;
  int vars_;
};

}  // namespace

BettiTable koszul_betti(const MonomialIdeal& ideal, BettiOf which) {
  BettiTable table;
  if (which == BettiOf::quotient && ideal.is_unit()) return table;
  if (which == BettiOf::submodule && ideal.is_zero()) return table;
  const Monomial box = ideal.lcm_of_generators();
  const int vars = ideal.n() + 1;
  std::vector<int> b(static_cast<std::size_t>(vars), 0);
  while (true) {
    long degree = 0;
    for (int e : b) degree += e;
    const auto h = MultidegreeKoszul(ideal, which, b).homology();
    for (std::size_t i = 0; i < h.size(); ++i) table.add(static_cast<int>(i), degree, h[i]);
    // Odometer over the box.
    int v = 0;
    while (v < vars && b[static_cast<std::size_t>(v)] == box[v]) b[static_cast<std::size_t>(v++)] = 0;
    if (v == vars) break;
    ++b[static_cast<std::size_t>(v)];
  }
  return table;
}

BettiTable koszul_betti(const MonomialSubmodule& module, BettiOf which) {
  BettiTable table;
  for (std::size_t c = 0; c < module.components.size(); ++c) {
    const long shift = module.degree_of(c);
    for (const auto& [key, v] : koszul_betti(module.components[c], which).entries)
      table.add(key.first, key.second + shift, v);
  }
  return table;
}

long regularity(const MonomialSubmodule& module, BettiOf which) {
  const auto reg = koszul_betti(module, which).regularity();
  if (!reg) throw ZeroModule("regularity of the zero module is undefined");
  return *reg;
}

long regularity(const MonomialIdeal& ideal, BettiOf which) {
  const auto reg = koszul_betti(ideal, which).regularity();
  if (!reg) throw ZeroModule("regularity of the zero module is undefined");
  return *reg;
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.gens()) {
    const int u = g.last_variable();
    for (int j = 0; j < u; ++j) {
      const Monomial swapped = g.colon_variable(u) * Monomial::variable(ideal.n(), j);
      if (!ideal.contains(swapped)) return false;
    }
  }
  return true;
}

long ek_regularity(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroModule("regularity of the zero ideal is undefined");
  if (!is_stable(ideal)) throw NotStable("ideal is not stable");
  return ideal.max_generator_degree();
}

}  // namespace gotzrep
