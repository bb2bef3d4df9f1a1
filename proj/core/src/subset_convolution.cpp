#include "cffa/subset_convolution.hpp"

#include <algorithm>
#include <limits>

#include "cffa/error.hpp"
#include "stopwatch.hpp"

namespace cffa {

// ---------------------------------------------------------------------------
// MaskPolynomial

MaskPolynomial::MaskPolynomial(int bits) : bits_(bits) {
  if (bits < 0 || bits > 30) fail(ErrorKind::Capacity, "MASK_WIDTH", "polynomials support at most 30 bits");
  coeffs_.assign(std::size_t{1} << bits, 0);
}

MaskPolynomial MaskPolynomial::monomial(int bits, JobMask exponent, std::uint64_t coeff) {
  MaskPolynomial p(bits);
  p.set(exponent, coeff);
  return p;
}

void MaskPolynomial::add(JobMask e, std::uint64_t c) {
  auto& slot = coeffs_.at(e);
  slot = (c >= kSaturation - slot) ? kSaturation : slot + c;
}

bool MaskPolynomial::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

std::vector<JobMask> MaskPolynomial::support() const {
  std::vector<JobMask> out;
  for (JobMask e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) out.push_back(e);
  return out;
}

MaskPolynomial hamming_projection(const MaskPolynomial& p, int h) {
  MaskPolynomial out(p.bits());
  for (JobMask e = 0; e < p.size(); ++e)
    if (popcount(e) == h) out.set(e, p[e]);
  return out;
}

MaskPolynomial representative(const MaskPolynomial& p) {
  MaskPolynomial out(p.bits());
  for (JobMask e = 0; e < p.size(); ++e)
    if (p[e] != 0) out.set(e, 1);
  return out;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= MaskPolynomial::kSaturation / b) return MaskPolynomial::kSaturation;
  return a * b;
}

}  // namespace

MaskPolynomial poly_multiply(const MaskPolynomial& p, const MaskPolynomial& q) {
  if (p.bits() != q.bits()) fail(ErrorKind::Contract, "POLY_WIDTH", "polynomials differ in width");
  MaskPolynomial out(p.bits());
  const auto ps = p.support();
  const auto qs = q.support();
  for (JobMask a : ps)
    for (JobMask b : qs) {
      const JobMask e = a + b;
      if (e < out.size()) out.add(e, saturating_mul(p[a], q[b]));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Bundle families

std::size_t BundleFamily::total() const noexcept {
  std::size_t t = 0;
  for (const auto& layer : masks_by_size) t += layer.size();
  return t;
}

namespace {

void check_width(const Instance& inst) {
  if (inst.job_count() > 30)
    fail(ErrorKind::Capacity, "MASK_WIDTH", "subset convolution supports at most 30 jobs");
}

std::vector<std::uint8_t> independence_table(const ConflictGraph& g) {
  const std::size_t size = std::size_t{1} << g.vertex_count();
  std::vector<std::uint8_t> independent(size, 1);
  for (std::size_t b = 1; b < size; ++b) {
    const JobMask rest = b & (b - 1);
    independent[b] = independent[rest] && (g.neighbor_mask(std::countr_zero(b)) & rest) == 0;
  }
  return independent;
}

}  // namespace

std::vector<BundleFamily> build_bundle_families(const Instance& inst) {
  check_width(inst);
  const int m = inst.job_count();
  const int cap = inst.effective_cap();
  const std::size_t size = std::size_t{1} << m;
  const auto independent = independence_table(inst.conflict());

  std::vector<BundleFamily> families;
  std::vector<Utility> utility(size, 0);
  for (int a = 0; a < inst.agent_count(); ++a) {
    BundleFamily family;
    family.agent = a;
    family.masks_by_size.resize(static_cast<std::size_t>(cap) + 1);
    for (std::size_t b = 1; b < size; ++b) {
      utility[b] = utility[b & (b - 1)] + inst.utility(a, std::countr_zero(b));
      const int s = popcount(b);
      if (s <= cap && independent[b] && utility[b] >= inst.eta()) family.masks_by_size[s].push_back(b);
    }
    families.push_back(std::move(family));
  }
  return families;
}

// ---------------------------------------------------------------------------
// Extraction

Allocation extract_assignment(const RoundPolynomials& rounds, const std::vector<BundleFamily>& families) {
  const int n = static_cast<int>(families.size());
  if (static_cast<int>(rounds.reach.size()) != n + 1)
    fail(ErrorKind::Contract, "ROUNDS", "round count must be agent count + 1");
  const std::size_t size = std::size_t{1} << rounds.bits;

  const auto& last = rounds.reach[n];
  JobMask e = 0;
  while (e < size && last[e] == 0) ++e;
  if (e == size) fail(ErrorKind::Internal, "NO_SOLUTION", "final round polynomial is zero");

  Allocation alloc;
  alloc.bundles.resize(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> member(size, 0);
  for (int i = n; i >= 1; --i) {
    const auto& family = families[i - 1];
    std::fill(member.begin(), member.end(), 0);
    for (const auto& layer : family.masks_by_size)
      for (JobMask s : layer) member[s] = 1;

    const auto& previous = rounds.reach[i - 1];
    JobMask chosen = 0;
    bool found = false;
    for (JobMask s = e; s != 0; s = (s - 1) & e) {
      if (member[s] && previous[e ^ s] && (!found || s < chosen)) {
        chosen = s;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::Internal, "BACKTRACK", "no backtracking step at round " + std::to_string(i));
    alloc.bundles[i - 1] = elements_of(chosen);
    e ^= chosen;
  }
  if (e != 0) fail(ErrorKind::Internal, "BACKTRACK", "backtracking did not reach the empty set");
  return alloc;
}

// ---------------------------------------------------------------------------
// Fast solver

namespace {

// Arithmetic is modulo 2^32. A product coefficient counts ordered pairs of
// disjoint sets whose union is the exponent, at most 2^m <= 2^30, so the
// Moebius inversion recovers it exactly despite intermediate wrap-around.
using Ranked = std::vector<std::uint32_t>;

void zeta(Ranked& a, int bits) {
  const std::size_t size = a.size();
  for (int b = 0; b < bits; ++b) {
    const std::size_t step = std::size_t{1} << b;
    for (std::size_t base = 0; base < size; base += 2 * step)
      for (std::size_t x = base; x < base + step; ++x) a[x + step] += a[x];
  }
}

void moebius(Ranked& a, int bits) {
  const std::size_t size = a.size();
  for (int b = 0; b < bits; ++b) {
    const std::size_t step = std::size_t{1} << b;
    for (std::size_t base = 0; base < size; base += 2 * step)
      for (std::size_t x = base; x < base + step; ++x) a[x + step] -= a[x];
  }
}

// Keeps the inclusion-minimal bundles of each family. Shrinking every bundle
// of a solution to a minimal one leaves a solution, so the verdict is unchanged.
std::vector<BundleFamily> minimal_families(const Instance& inst, std::vector<BundleFamily> families) {
  for (auto& family : families)
    for (auto& layer : family.masks_by_size)
      std::erase_if(layer, [&](JobMask b) {
        Utility total = 0;
        Utility lightest = std::numeric_limits<Utility>::max();
        for (JobMask rest = b; rest != 0; rest &= rest - 1) {
          const Utility u = inst.utility(family.agent, std::countr_zero(rest));
          total += u;
          lightest = std::min(lightest, u);
        }
        return total - lightest >= inst.eta();
      });
  return families;
}

}  // namespace

SolveReport solve_fpt_items(const Instance& inst) {
  detail::Stopwatch clock;
  check_width(inst);
  const int n = inst.agent_count();
  const int m = inst.job_count();
  const std::size_t size = std::size_t{1} << m;

  SolveReport report;
  report.algorithm = "subsetconv";
  const auto all_families = build_bundle_families(inst);
  const auto families = minimal_families(inst, all_families);

  std::vector<std::uint8_t> rank(size);
  for (std::size_t e = 0; e < size; ++e) rank[e] = static_cast<std::uint8_t>(popcount(e));

  RoundPolynomials rounds;
  rounds.bits = m;
  rounds.reach.assign(static_cast<std::size_t>(n) + 1, std::vector<std::uint8_t>(size, 0));
  rounds.reach[0][0] = 1;

  // limit[i]: largest useful rank after round i, leaving room for the
  // smallest bundles of the agents still to come. Larger exponents are dropped.
  std::vector<int> limit(static_cast<std::size_t>(n) + 1, m);
  bool some_family_empty = false;
  for (int i = n - 1; i >= 1; --i) {
    const auto& layers = families[i].masks_by_size;
    int smallest = 0;
    while (smallest < static_cast<int>(layers.size()) && layers[smallest].empty()) ++smallest;
    some_family_empty = some_family_empty || smallest == static_cast<int>(layers.size());
    limit[i] = limit[i + 1] - smallest;
  }

  std::uint64_t transforms = 0;
  std::uint64_t products = 0;
  for (int i = 1; i <= n && !some_family_empty; ++i) {
    const auto& family = families[i - 1];
    const auto& previous = rounds.reach[i - 1];
    auto& current = rounds.reach[i];

    if (i == 1) {
      // Round one is the family indicator itself.
      for (std::size_t s = 0; s < family.masks_by_size.size() && static_cast<int>(s) <= limit[1]; ++s)
        for (JobMask b : family.masks_by_size[s]) current[b] = 1;
      continue;
    }

    if (i == n) {
      // Last round: only one reachable exponent is needed. below[X] counts
      // family masks inside X, so A extends iff below[~A] > 0.
      Ranked below(size, 0);
      for (const auto& layer : family.masks_by_size)
        for (JobMask s : layer) below[s] = 1;
      zeta(below, m);
      ++transforms;
      const JobMask full = size - 1;
      for (JobMask a = 0; a < size; ++a) {
        if (!previous[a] || below[full ^ a] == 0) continue;
        JobMask best = full;
        for (const auto& layer : family.masks_by_size)
          for (JobMask s : layer)
            if ((s & a) == 0 && s < best) best = s;
        current[a | best] = 1;
        break;
      }
      continue;
    }

    std::vector<int> prev_ranks;
    std::vector<Ranked> prev_hat(static_cast<std::size_t>(m) + 1);
    for (std::size_t e = 0; e < size; ++e) {
      if (!previous[e]) continue;
      auto& layer = prev_hat[rank[e]];
      if (layer.empty()) {
        layer.assign(size, 0);
        prev_ranks.push_back(rank[e]);
      }
      layer[e] = 1;
    }
    std::sort(prev_ranks.begin(), prev_ranks.end());
    if (prev_ranks.empty()) break;  // this and all later rounds are zero
    std::vector<int> fam_ranks;
    std::vector<Ranked> fam_hat(family.masks_by_size.size());
    for (std::size_t s = 1; s < family.masks_by_size.size(); ++s) {
      if (family.masks_by_size[s].empty() || prev_ranks.front() + static_cast<int>(s) > limit[i]) continue;
      fam_hat[s].assign(size, 0);
      for (JobMask b : family.masks_by_size[s]) fam_hat[s][b] = 1;
      fam_ranks.push_back(static_cast<int>(s));
    }
    if (prev_ranks.empty() || fam_ranks.empty()) break;  // this and all later rounds are zero

    for (int r : prev_ranks) {
      zeta(prev_hat[r], m);
      ++transforms;
    }
    for (int r : fam_ranks) {
      zeta(fam_hat[r], m);
      ++transforms;
    }

    Ranked product(size);
    for (int target = 1; target <= limit[i]; ++target) {
      std::fill(product.begin(), product.end(), 0);
      bool any = false;
      for (int r : prev_ranks) {
        const int other = target - r;
        if (other < 1 || other >= static_cast<int>(fam_hat.size()) || fam_hat[other].empty()) continue;
        any = true;
        ++products;
        const auto& lhs = prev_hat[r];
        const auto& rhs = fam_hat[other];
        for (std::size_t x = 0; x < size; ++x) product[x] += lhs[x] * rhs[x];
      }
      if (!any) continue;
      moebius(product, m);
      ++transforms;
      for (std::size_t e = 0; e < size; ++e)
        if (rank[e] == target && product[e] != 0) current[e] = 1;
    }
  }

  report.feasible = std::any_of(rounds.reach[n].begin(), rounds.reach[n].end(), [](auto c) { return c != 0; });
  if (report.feasible) report.certificate = extract_assignment(rounds, families);
  std::uint64_t family_masks = 0;
  std::uint64_t minimal_masks = 0;
  for (const auto& f : all_families) family_masks += f.total();
  for (const auto& f : families) minimal_masks += f.total();
  report.counters["family_masks"] = family_masks;
  report.counters["minimal_masks"] = minimal_masks;
  report.counters["transforms"] = transforms;
  report.counters["pointwise_products"] = products;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// ---------------------------------------------------------------------------
// Literal polynomial route

SolveReport solve_fpt_items_polynomial(const Instance& inst, bool reduce_each_round) {
  detail::Stopwatch clock;
  const int n = inst.agent_count();
  const int m = inst.job_count();
  if (m > 16) fail(ErrorKind::Capacity, "MASK_WIDTH", "polynomial route supports at most 16 jobs");

  SolveReport report;
  report.algorithm = reduce_each_round ? "subsetconv-poly" : "subsetconv-poly-unreduced";
  const auto families = build_bundle_families(inst);
  const int cap = inst.effective_cap();

  auto family_poly = [&](int agent, int s) {
    MaskPolynomial f(m);
    for (JobMask b : families[agent].masks_by_size[s]) f.set(b, 1);
    return f;
  };

  // round[s] = p^i_s for s in [0, m]
  std::vector<MaskPolynomial> round(static_cast<std::size_t>(m) + 1, MaskPolynomial(m));
  round[0].set(0, 1);
  RoundPolynomials trace;
  trace.bits = m;
  auto snapshot = [&] {
    std::vector<std::uint8_t> reach(std::size_t{1} << m, 0);
    for (const auto& p : round)
      for (JobMask e : p.support()) reach[e] = 1;
    trace.reach.push_back(std::move(reach));
  };
  snapshot();

  for (int i = 0; i < n; ++i) {
    std::vector<MaskPolynomial> next(static_cast<std::size_t>(m) + 1, MaskPolynomial(m));
    for (int s1 = 0; s1 <= m; ++s1) {
      if (round[s1].is_zero()) continue;
      for (int s2 = 1; s2 <= cap && s1 + s2 <= m; ++s2) {
        const auto f = family_poly(i, s2);
        if (f.is_zero()) continue;
        const auto term = hamming_projection(poly_multiply(round[s1], f), s1 + s2);
        for (JobMask e : term.support()) next[s1 + s2].add(e, term[e]);
      }
    }
    if (reduce_each_round)
      for (auto& p : next) p = representative(p);
    round = std::move(next);
    snapshot();
  }

  report.feasible = std::any_of(round.begin(), round.end(), [](const auto& p) { return !p.is_zero(); });
  if (report.feasible) report.certificate = extract_assignment(trace, families);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace cffa
