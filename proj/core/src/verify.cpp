#include "superschur/verify.hpp"

#include "superschur/classify.hpp"
#include "superschur/cohomology.hpp"
#include "superschur/constructions.hpp"
#include "superschur/corpus.hpp"
#include "superschur/invariants.hpp"
#include "superschur/structure.hpp"

namespace superschur {

namespace {

class Check {
 public:
  Check(std::string key, std::string description)
      : entry_{std::move(key), std::move(description), true, 0, {}, false} {}

  void expect(bool ok, const std::string& what) {
    ++entry_.cases;
    if (!ok && entry_.passed) {
      entry_.passed = false;
      entry_.detail = what;
    }
  }
  LedgerEntry done() && { return std::move(entry_); }

 private:
  LedgerEntry entry_;
};

bool matches_model(const LieSuperalgebra& Q, const LieSuperalgebra& model) {
  return fingerprint(Q) == fingerprint(model);
}

/// Homogeneous elements of Z_2(L) \ Z(L) worth testing: canonical
/// representatives of Z_2/Z per parity, random combinations of them, and
/// representatives shifted by random central elements.
std::vector<std::pair<Vec, Parity>> second_center_samples(const LieSuperalgebra& L, Rng& rng) {
  const Subspace Z = center(L);
  const Subspace Z2 = second_center(L);
  std::vector<std::pair<Vec, Parity>> out;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Matrix reps;
    for (const auto& v : Z2.rows(p)) reps.push_back(reduce(v, Z.rows(p)));
    reps = rref(std::move(reps));
    if (reps.empty()) continue;
    for (const auto& r : reps) out.emplace_back(r, p);
    out.emplace_back(random_combination(reps, L.dim(), rng), p);
    Vec shifted = random_combination(reps, L.dim(), rng);
    if (!Z.rows(p).empty()) {
      const Vec c = random_combination(Z.rows(p), L.dim(), rng);
      axpy(shifted, 1, c);
    }
    out.emplace_back(std::move(shifted), p);
  }
  return out;
}

std::string name_of(const LieSuperalgebra& L) { return L.name().empty() ? "<unnamed>" : L.name(); }

}  // namespace

std::vector<LedgerEntry> run_verification(const VerificationOptions& options) {
  std::vector<LedgerEntry> ledger;
  Rng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto corpus = random_corpus(options.seed, options.corpus_size);
  std::vector<InvariantReport> reports;
  reports.reserve(corpus.size());
  for (const auto& L : corpus) reports.push_back(report(L));

  {
    Check c("classification-table", "multiplier-rank <= 2 table rows and intermediates");
    const auto t = verify_theorem_table();
    for (const auto& row : t.rows) {
      c.expect(row.passed(), to_string(row.label) + ": computed smr " + to_string(row.computed_smr) +
                                 ", expected " + to_string(row.expected_smr));
    }
    c.expect(t.abelian_grid_ok, "some Ab(m,n), m+n <= 5, has nonzero smr");
    c.expect(t.intermediates_ok, "sdim M(H(1,0)+Ab(1,0)) = " + to_string(t.multiplier_h10_ab10) +
                                     ", sdim M(H(1,0)+Ab(0,1)) = " + to_string(t.multiplier_h10_ab01));
    c.expect(t.fingerprints_distinct, "two non-abelian rows share a fingerprint");
    ledger.push_back(std::move(c).done());
  }

  {
    Check c("heisenberg-even-multiplier", "sdim M(H(p,q)) for 0 <= p,q <= 3");
    for (std::size_t p = 0; p <= 3; ++p) {
      for (std::size_t q = 0; q <= 3; ++q) {
        if (p + q == 0) continue;
        const auto sp = static_cast<std::int64_t>(p), sq = static_cast<std::int64_t>(q);
        SuperDim expected;
        if (p + q >= 2) {
          expected = SuperDim(2 * sp * sp - sp + (sq * sq + sq) / 2 - 1, 2 * sp * sq);
        } else {
          expected = p == 1 ? SuperDim(2, 0) : SuperDim(0, 0);
        }
        const SuperDim got = multiplier(heisenberg_even(p, q)).sdim_M;
        c.expect(got == expected, "H(" + std::to_string(p) + "," + std::to_string(q) + "): got " +
                                      to_string(got) + ", expected " + to_string(expected));
      }
    }
    ledger.push_back(std::move(c).done());
  }

  {
    Check c("heisenberg-odd-multiplier", "sdim M(H(k)) for 1 <= k <= 4");
    for (std::int64_t k = 1; k <= 4; ++k) {
      const SuperDim expected = k == 1 ? SuperDim(1, 1) : SuperDim(k * k, k * k - 1);
      const SuperDim got = multiplier(heisenberg_odd(static_cast<std::size_t>(k))).sdim_M;
      c.expect(got == expected, "H(" + std::to_string(k) + "): got " + to_string(got) +
                                    ", expected " + to_string(expected));
    }
    ledger.push_back(std::move(c).done());
  }

  {
    Check c("abelian-characterization", "smr = (0,0) exactly for abelian algebras");
    for (std::size_t m = 0; m <= 5; ++m) {
      for (std::size_t n = 0; m + n <= 5; ++n) {
        const auto L = abelian(m, n);
        c.expect(multiplier(L).sdim_M == bound(L.sdim()), name_of(L) + ": multiplier below bound");
      }
    }
    for (const auto& [name, L] : model_registry()) {
      c.expect(!(smr(L) == SignedSuperDim{0, 0}), name + ": non-abelian with smr (0,0)");
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const bool zero = reports[i].smr == SignedSuperDim{0, 0};
      c.expect(zero == corpus[i].is_abelian(), name_of(corpus[i]) + ": smr (0,0) iff abelian fails");
    }
    ledger.push_back(std::move(c).done());
  }

  {
    Check derived("derived-bound", "sdim L^2 <= bound(sdim L/Z(L)) on the corpus");
    Check mult("multiplier-bound", "sdim M(L) <= bound(sdim L) on the corpus");
    Check image("central-quotient-image", "sdim(L^2 ∩ Z(L)) <= sdim M(L/Z(L)) on the corpus");
    for (const auto& L : corpus) {
      const auto b = check_bounds(L);
      derived.expect(b.derived_bound, name_of(L) + ": margin " + to_string(b.derived_margin));
      mult.expect(b.multiplier_bound, name_of(L) + ": margin " + to_string(b.multiplier_margin));
      image.expect(b.central_image_bound, name_of(L) + ": margin " + to_string(b.central_image_margin));
    }
    ledger.push_back(std::move(derived).done());
    ledger.push_back(std::move(mult).done());
    ledger.push_back(std::move(image).done());
  }

  {
    Check c("direct-sum-formula", "sdim M(A+B) = M(A) + M(B) + (A/A^2 ⊗ B/B^2)");
    std::vector<LieSuperalgebra> pool;
    for (std::size_t a = 0; a <= 2; ++a) {
      for (std::size_t b = 0; b <= 2; ++b) pool.push_back(abelian(a, b));
    }
    pool.push_back(heisenberg_even(1, 0));
    pool.push_back(heisenberg_even(0, 1));
    pool.push_back(heisenberg_odd(1));
    pool.push_back(heisenberg_odd(2));
    pool.push_back(model_l4());
    auto run = [&c](const LieSuperalgebra& A, const LieSuperalgebra& B) {
      const auto k = kunneth_check(A, B);
      c.expect(k.holds(), name_of(A) + " + " + name_of(B) + ": direct " + to_string(k.lhs) +
                              " vs formula " + to_string(k.rhs));
    };
    for (int i = 0; i < 20; ++i) run(pool[rng.below(pool.size())], pool[rng.below(pool.size())]);
    if (!corpus.empty()) {
      for (int i = 0; i < 10; ++i) run(corpus[rng.below(corpus.size())], corpus[rng.below(corpus.size())]);
    }
    ledger.push_back(std::move(c).done());
  }

  const auto h10 = heisenberg_even(1, 0);
  const auto h01 = heisenberg_even(0, 1);
  const auto h10_ab10 = direct_sum(h10, abelian(1, 0));
  const auto h10_ab01 = direct_sum(h10, abelian(0, 1));
  const auto l4 = model_l4();

  {
    Check c("rank-one", "no smr (0,1); smr (1,0) only for H(1,0)");
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& r = reports[i];
      c.expect(!(r.smr == SignedSuperDim{0, 1}), name_of(corpus[i]) + ": smr (0,1)");
      if (r.smr == SignedSuperDim{1, 0}) {
        c.expect(matches_model(corpus[i], h10), name_of(corpus[i]) + ": smr (1,0) but not H(1,0)");
      }
    }
    ledger.push_back(std::move(c).done());
  }

  {
    Check c("rank-two", "no smr (0,2); every mr <= 2 algebra is a table row");
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& r = reports[i];
      c.expect(!(r.smr == SignedSuperDim{0, 2}), name_of(corpus[i]) + ": smr (0,2)");
      if (r.mr <= 2) {
        const auto cls = classify_mr_le2(corpus[i]);
        const auto* nc = std::get_if<NotCovered>(&cls);
        c.expect(nc == nullptr, name_of(corpus[i]) + ": " + (nc ? nc->detail : std::string()));
      }
    }
    ledger.push_back(std::move(c).done());
  }

  {
    Check c("lambda-mu-bounds", "lambda/mu bounds for homogeneous z in Z_2(L) \\ Z(L)");
    for (const auto& L : corpus) {
      const SuperDim mn = (L.sdim() - center(L).sdim()).to_superdim();
      for (const auto& [z, p] : second_center_samples(L, rng)) {
        const auto lm = lambda_mu(L, z);
        c.expect(lambda_mu_within_bounds(lm, p, mn),
                 name_of(L) + ": lambda " + to_string(lm.lambda) + ", mu " + to_string(lm.mu) +
                     " against " + to_string(mn));
      }
    }
    ledger.push_back(std::move(c).done());
  }

  {
    Check zero("derived-rank-zero", "sdr = (0,0) forces L/Z(L) abelian or H(1,0)");
    Check one("derived-rank-one", "sdr in {(1,0),(0,1)} restricts L/Z(L)");
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& L = corpus[i];
      const auto sdr = reports[i].sdr;
      if (!(sdr == SignedSuperDim{0, 0}) && !(sdr == SignedSuperDim{1, 0}) &&
          !(sdr == SignedSuperDim{0, 1})) {
        continue;
      }
      const auto Q = quotient(L, center(L)).algebra();
      const bool ab = Q.is_abelian();
      if (sdr == SignedSuperDim{0, 0}) {
        zero.expect(ab || matches_model(Q, h10), name_of(L) + ": central quotient is neither");
        continue;
      }
      if (const auto h = recognize_heisenberg(Q)) {
        const HeisenbergParams want{HeisenbergFamily::EvenCenter, sdr.even == 1 ? 1u : 0u,
                                    sdr.even == 1 ? 0u : 1u};
        one.expect(*h == want, name_of(L) + ": Heisenberg central quotient with wrong parameters");
      }
      if (sdr == SignedSuperDim{1, 0}) {
        one.expect(ab || matches_model(Q, h10) || matches_model(Q, h10_ab10) || matches_model(Q, l4),
                   name_of(L) + ": sdr (1,0) with unexpected central quotient");
      } else {
        one.expect(ab || matches_model(Q, h01) || matches_model(Q, h10_ab01),
                   name_of(L) + ": sdr (0,1) with unexpected central quotient");
      }
    }
    ledger.push_back(std::move(zero).done());
    ledger.push_back(std::move(one).done());
  }

  {
    LedgerEntry stem{"cover-stem-condition", "cover candidates satisfying M ⊆ K^2", true, 0, {}, true};
    std::size_t held = 0;
    for (const auto& L : corpus) {
      ++stem.cases;
      if (cover_candidate(L).stem_condition()) ++held;
    }
    stem.detail = std::to_string(held) + "/" + std::to_string(stem.cases) + " satisfy the stem condition";
    ledger.push_back(std::move(stem));
  }

  return ledger;
}

bool all_passed(const std::vector<LedgerEntry>& ledger) {
  for (const auto& e : ledger) {
    if (!e.informational && !e.passed) return false;
  }
  return true;
}

}  // namespace superschur
