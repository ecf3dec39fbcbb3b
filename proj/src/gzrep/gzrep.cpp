#include "gztoda/gzrep/gzrep.hpp"

#include <numeric>

#include "gztoda/error.hpp"
#include "gztoda/exact/check.hpp"
#include "gztoda/parallel.hpp"

namespace gztoda::gzrep {

using exact::ExactScalar;
using exact::MultiPoly;
using exact::Shift;

GzRep::GzRep(int N, std::vector<std::string> spectral)
    : N_(N), vars_(exact::VarTable::gelfand_zetlin(N, spectral)), hbar_(vars_->hbar()) {
  if (N < 1) throw Error(ErrorCode::Index, "rank must be positive");
}

std::size_t GzRep::gamma(int n, int j) const {
  auto v = vars_->gz(n, j);
  if (!v) throw Error(ErrorCode::Index, "no variable gamma_" + std::to_string(n) + std::to_string(j));
  return *v;
}

RatFunc GzRep::ih(const ExactScalar& c) const {
  return RatFunc(MultiPoly::term(exact::Monomial::var(hbar_), ExactScalar::i() * c));
}

DifferenceOperator GzRep::beta(int n, int j, int power) const {
  if (n >= N_) throw Error(ErrorCode::Index, "row-N variables are labels and cannot be shifted");
  return DifferenceOperator::shift(vars_, gamma(n, j), power);
}

DifferenceOperator GzRep::simple(int n, int m) const {
  const ExactScalar half(mpq_class(1, 2));
  if (n == m) {
    RatFunc s;
    for (int j = 1; j <= n; ++j) s += g(n, j);
    for (int j = 1; j < n; ++j) s -= g(n - 1, j);
    return mult(s / ih());
  }
  DifferenceOperator op(vars_);
  if (m == n + 1) {
    for (int j = 1; j <= n; ++j) {
      RatFunc c = RatFunc(-1) / ih();
      for (int r = 1; r <= n + 1; ++r) c *= g(n, j) - g(n + 1, r) - ih(half);
      for (int s = 1; s <= n; ++s) {
        if (s != j) c /= g(n, j) - g(n, s);
      }
      op += beta(n, j, -1).left_mul(c);
    }
    return op;
  }
  // n == m + 1: lowering generator acting on row m.
  const int row = m;
  for (int j = 1; j <= row; ++j) {
    RatFunc c = RatFunc(1) / ih();
    for (int r = 1; r < row; ++r) c *= g(row, j) - g(row - 1, r) + ih(half);
    for (int s = 1; s <= row; ++s) {
      if (s != j) c /= g(row, j) - g(row, s);
    }
    op += beta(row, j, 1).left_mul(c);
  }
  return op;
}

const DifferenceOperator& GzRep::E(int n, int m) const {
  if (n < 1 || m < 1 || n > N_ || m > N_) {
    throw Error(ErrorCode::Index, "E_" + std::to_string(n) + "," + std::to_string(m) + " outside gl(" +
                                      std::to_string(N_) + ")");
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({n, m});
    if (it != cache_.end()) return *it->second;
  }
  DifferenceOperator op(vars_);
  if (std::abs(n - m) <= 1) {
    op = simple(n, m);
  } else {
    op = E_via(n, n < m ? n + 1 : n - 1, m);
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.try_emplace({n, m}, std::make_unique<DifferenceOperator>(std::move(op)));
  return *it->second;
}

DifferenceOperator GzRep::E_via(int j, int m, int k) const {
  if (m == j || m == k || j == k) throw Error(ErrorCode::Index, "intermediate index must differ from both ends");
  return exact::commutator(E(j, m), E(m, k));
}

ExactScalar rho(int n, int k) { return ExactScalar(mpq_class(n - 2 * k + 1, 2)); }

DifferenceOperator ordered_determinant(const GzRep& rep, int n, std::size_t lambda,
                                       const std::function<DifferenceOperator(int, int, const RatFunc&)>& entry) {
  // entries[k][a] = X_{a,k}(lambda - i hbar rho_k)
  std::vector<std::vector<DifferenceOperator>> entries(n + 1);
  for (int k = 1; k <= n; ++k) {
    RatFunc lam = RatFunc::var(lambda) - rep.ih(rho(n, k));
    entries[k].push_back(DifferenceOperator(rep.vars()));
    for (int a = 1; a <= n; ++a) entries[k].push_back(entry(a, k, lam));
  }
  DifferenceOperator total(rep.vars());
  std::vector<int> perm(n + 1, 0);
  std::function<void(int, unsigned, const DifferenceOperator&)> rec = [&](int k, unsigned used,
                                                                          const DifferenceOperator& prefix) {
    if (k > n) {
      int inversions = 0;
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) inversions += perm[a] > perm[b];
      }
      total += (inversions % 2) ? -prefix : prefix;
      return;
    }
    for (int a = 1; a <= n; ++a) {
      if (used & (1u << a)) continue;
      const DifferenceOperator& f = entries[k][a];
      if (f.is_zero()) continue;
      perm[k] = a;
      rec(k + 1, used | (1u << a), prefix * f);
    }
  };
  rec(1, 0, rep.identity());
  return total;
}

DifferenceOperator casimir_hu(const GzRep& rep, int n, std::size_t lambda) {
  if (n > 4) throw Error(ErrorCode::SizeLimit, "Casimir generating function limited to n <= 4");
  if (n > rep.N()) throw Error(ErrorCode::Index, "n exceeds the rank");
  return ordered_determinant(rep, n, lambda, [&](int a, int k, const RatFunc& lam) {
    DifferenceOperator op = rep.E(a, k).left_mul(-rep.ih());
    if (a == k) op += rep.mult(lam);
    return op;
  });
}

namespace {

std::string ename(int i, int j) { return "E" + std::to_string(i) + std::to_string(j); }

}  // namespace

Report verify_gl_relations(int N, const VerifyOptions& opts) {
  GzRep rep(N);
  // Build all images up front so the parallel phase only reads the cache.
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) rep.E(i, j);
  }
  const std::size_t n = static_cast<std::size_t>(N);
  const std::size_t total = n * n * n * n;
  auto checks = parallel_map<Check>(total, opts.jobs, [&](std::size_t idx) {
    const int i = static_cast<int>(idx / (n * n * n)) + 1;
    const int j = static_cast<int>(idx / (n * n) % n) + 1;
    const int k = static_cast<int>(idx / n % n) + 1;
    const int l = static_cast<int>(idx % n) + 1;
    DifferenceOperator lhs = exact::commutator(rep.E(i, j), rep.E(k, l));
    DifferenceOperator rhs(rep.vars());
    if (j == k) rhs += rep.E(i, l);
    if (l == i) rhs -= rep.E(k, j);
    Check c = exact::check_operators("[" + ename(i, j) + "," + ename(k, l) + "]", lhs, rhs, opts);
    c.params = {{"N", N}, {"i", i}, {"j", j}, {"k", k}, {"l", l}};
    return c;
  });
  Report r;
  for (auto& c : checks) r.add(std::move(c));
  r.label("glN-relations", "m1");
  return r;
}

Report verify_casimir(int n, const VerifyOptions& opts) {
  GzRep rep(n, {"lambda"});
  const std::size_t lam = rep.vars()->index("lambda");
  Report r;
  DifferenceOperator A = casimir_hu(rep, n, lam);
  RatFunc prod(1);
  for (int j = 1; j <= n; ++j) prod *= RatFunc::var(lam) - rep.g(n, j);
  Check c = exact::check_operators("A_" + std::to_string(n) + "(lambda) = prod(lambda - gamma_nj)", A,
                                   rep.mult(prod), opts);
  c.params = {{"n", n}, {"terms", A.terms().size()}};
  r.add(c);

  DifferenceOperator at_root = A.map_coefficients([&](const RatFunc& f) { return f.substitute(lam, rep.g(n, 1)); });
  Check z = exact::check_operators("A_" + std::to_string(n) + "(gamma_n1) = 0", at_root,
                                   DifferenceOperator(rep.vars()), opts);
  z.params = {{"n", n}};
  r.add(z);
  r.label("casimir", "cas1/cas2");
  return r;
}

Report verify_gl_extras(int N, const VerifyOptions& opts) {
  Report r;
  GzRep rep(N, {"lambda"});
  for (int j = 1; j <= N; ++j) {
    for (int k = 1; k <= N; ++k) {
      if (j == k) continue;
      for (int m = 1; m <= N; ++m) {
        if (m == j || m == k) continue;
        Check c = exact::check_operators(
            ename(j, k) + " = [" + ename(j, m) + "," + ename(m, k) + "]", rep.E_via(j, m, k), rep.E(j, k), opts);
        c.params = {{"N", N}, {"j", j}, {"m", m}, {"k", k}};
        c.anchor = "m1";
        r.add(c);
      }
    }
  }
  if (N == 2) {
    const std::size_t lam = rep.vars()->index("lambda");
    DifferenceOperator A = casimir_hu(rep, 2, lam);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        Check c = exact::check_operators("[A_2(lambda)," + ename(i, j) + "] = 0", exact::commutator(A, rep.E(i, j)),
                                         DifferenceOperator(rep.vars()), opts);
        c.params = {{"N", 2}, {"i", i}, {"j", j}};
        c.anchor = "cas1";
        r.add(c);
      }
    }
  }
  r.label("glN-relations", "m1");
  return r;
}

WhittakerVector whittaker_vector(const GzRep& rep, Side side) {
  const ExactScalar minus_i = -ExactScalar::i();
  if (side == Side::Left) return {side, SpecialState(rep.vars(), RatFunc(1)), minus_i};
  const int N = rep.N();
  if (N < 2) throw Error(ErrorCode::Index, "Whittaker vectors need N >= 2");
  SpecialState s(rep.vars(), RatFunc(1));
  exact::ExpFactor e;
  bool any = false;
  for (int n = 1; n < N; ++n) {
    for (int j = 1; j <= n; ++j) {
      e.r[rep.gamma(n, j)] = -(n - 1);
      any = any || n > 1;
    }
  }
  if (any) s.add_exp(e);
  const RatFunc half(ExactScalar(mpq_class(1, 2)));
  for (int n = 1; n < N; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int m = 1; m <= n + 1; ++m) {
        RatFunc z = (rep.g(n, k) - rep.g(n + 1, m)) / rep.ih() + half;
        exact::GammaFactor gf{z, {}, 1};
        gf.steps[rep.gamma(n, k)] = 1;
        gf.steps[rep.gamma(n + 1, m)] = -1;
        exact::HbarPower hp{z, gf.steps};
        s.add_hbar_power(hp);
        s.add_gamma(gf);
      }
    }
  }
  return {side, s, minus_i};
}

Report verify_whittaker(int N, const VerifyOptions& opts) {
  GzRep rep(N);
  Report r;
  const RatFunc chi = RatFunc(-ExactScalar::i()) / rep.h();
  auto left = whittaker_vector(rep, Side::Left);
  auto right = whittaker_vector(rep, Side::Right);
  for (int n = 1; n < N; ++n) {
    const std::string ns = std::to_string(n);
    Check c = exact::check_ratfuncs(ename(n + 1, n) + " w'_N = -i/hbar w'_N", rep.E(n + 1, n).apply(RatFunc(1)), chi,
                                    *rep.vars(), opts);
    c.params = {{"N", N}, {"n", n}, {"side", "left"}};
    c.anchor = "fww'";
    r.add(c);
    auto lhs = exact::apply_special(rep.E(n, n + 1), right.state);
    Check d = exact::check_states(ename(n, n + 1) + " w_N = -i/hbar w_N", lhs, right.state.with_prefactor(chi), opts);
    d.params = {{"N", N}, {"n", n}, {"side", "right"}};
    d.anchor = "fww''";
    r.add(d);
  }
  r.label("whittaker", "fww'/fww''");
  return r;
}

Report verify_lagrange_identity(int n_max, const VerifyOptions& opts) {
  Report r;
  const ExactScalar half(mpq_class(1, 2));
  for (int n = 1; n <= n_max; ++n) {
    GzRep rep(n);
    RatFunc sum;
    for (int j = 1; j <= n; ++j) {
      RatFunc t(1);
      for (int q = 1; q < n; ++q) t *= rep.g(n, j) - rep.g(n - 1, q) + rep.ih(half);
      for (int s = 1; s <= n; ++s) {
        if (s != j) t /= rep.g(n, j) - rep.g(n, s);
      }
      sum += t;
    }
    Check c = exact::check_ratfuncs("Lagrange sum = 1, n=" + std::to_string(n), sum, RatFunc(1), *rep.vars(), opts);
    c.params = {{"n", n}};
    r.add(c);
  }
  r.label("whittaker", "fww'");
  return r;
}

namespace {

MultiPoly swap_vars(const MultiPoly& p, std::size_t a, std::size_t b) {
  std::vector<MultiPoly::Term> ts = p.terms();
  for (auto& [m, c] : ts) std::swap(m.exp[a], m.exp[b]);
  return MultiPoly::from_terms(std::move(ts));
}

}  // namespace

bool is_row_symmetric_polynomial(const GzRep& rep, const RatFunc& f, int* degree) {
  uint32_t dynamic = 0;
  for (int n = 1; n < rep.N(); ++n) {
    for (int j = 1; j <= n; ++j) dynamic |= 1u << rep.gamma(n, j);
  }
  for (const auto& [fac, m] : f.den_factors()) {
    if (fac.support() & dynamic) return false;
  }
  for (int n = 2; n < rep.N(); ++n) {
    for (int j = 1; j < n; ++j) {
      if (swap_vars(f.num(), rep.gamma(n, j), rep.gamma(n, j + 1)) != f.num()) return false;
    }
  }
  if (degree) {
    int d = 0;
    for (const auto& [m, c] : f.num().terms()) {
      int e = 0;
      for (std::size_t v = 0; v < exact::kMaxVars; ++v) {
        if (dynamic & (1u << v)) e += m.exp[v];
      }
      d = std::max(d, e);
    }
    *degree = d;
  }
  return true;
}

std::vector<SpanProbe> module_span_probe(int N, int max_len) {
  GzRep rep(N);
  auto w = whittaker_vector(rep, Side::Right).state;
  std::vector<std::pair<int, int>> gens;
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) gens.emplace_back(i, j);
  }
  std::vector<SpanProbe> out;
  SpanProbe id;
  id.word = "1";
  id.member = is_row_symmetric_polynomial(rep, w.prefactor(), &id.degree);
  out.push_back(id);
  // Breadth-first over words; each level reuses the states of the previous one.
  std::vector<std::pair<std::string, SpecialState>> level{{"", w}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::string, SpecialState>> next;
    for (const auto& [word, st] : level) {
      for (auto [i, j] : gens) {
        SpecialState s = exact::apply_special(rep.E(i, j), st);
        SpanProbe p;
        p.word = word.empty() ? ename(i, j) : ename(i, j) + "*" + word;
        p.member = s.same_core(w) && is_row_symmetric_polynomial(rep, s.prefactor(), &p.degree);
        if (!p.member) p.detail = exact::truncate(s.prefactor().to_string(rep.vars().get()));
        out.push_back(p);
        next.emplace_back(p.word, std::move(s));
      }
    }
    level = std::move(next);
  }
  return out;
}

Report verify_span(int N, int max_len, const VerifyOptions&) {
  Report r;
  for (const auto& p : module_span_probe(N, max_len)) {
    Check c;
    c.name = p.word + " w_N in span";
    c.params = {{"N", N}, {"word", p.word}, {"degree", p.degree}};
    c.status = p.member ? Status::Pass : Status::Fail;
    c.exact_zero = p.member;
    c.witness = p.detail;
    r.add(c);
  }
  r.label("span-probe", "bas1/bas2");
  return r;
}

}  // namespace gztoda::gzrep
