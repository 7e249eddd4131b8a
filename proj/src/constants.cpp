#include "motiondual/constants.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "motiondual/errors.hpp"

namespace motiondual {

namespace {

std::string str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

std::size_t diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

// A handful of deterministic input triples for the merge construction.
std::vector<std::array<Signature, 3>> sample_triples(int n, int bound) {
  const auto sigmas = enumerate(n - 1, bound);
  const auto& lo = sigmas.front();
  const auto& hi = sigmas.back();
  const auto& mid = sigmas[sigmas.size() / 2];
  return {{lo, lo, lo}, {lo, mid, hi}, {hi, hi, mid}};
}

}  // namespace

bool ConstantsReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.holds; });
}

std::vector<std::string> ConstantsReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.holds) out.push_back(c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  return out;
}

int default_bound(int n) { return n <= 9 ? 3 : 1; }

ConstantsReport predict(int n) {
  if (n < 2) throw PreconditionViolated("predict: n must be >= 2 (got " + std::to_string(n) + ")");
  ConstantsReport r;
  r.n = n;
  r.K_A = 1;
  if (n == 2) {
    r.orc_A = 1;
    r.D_A = 0;
    r.orc_MA = 2;
    r.Ks_MA = Rational(1);
    r.K_MA = Rational(1);
    r.formula_exception = true;
    return r;
  }
  const std::size_t half_up = static_cast<std::size_t>((n + 1) / 2);
  r.orc_A = static_cast<std::size_t>(n / 2);
  r.D_A = half_up - 1;
  r.orc_MA = half_up;
  r.Ks_MA = Rational(static_cast<long long>(r.orc_MA), 2);
  r.K_MA = k_formula(n);
  return r;
}

ConstantsReport cross_check(int n, int bound, CrossCheckArtifacts* artifacts) {
  if (n < 3) throw PreconditionViolated("cross_check: n must be >= 3");
  if (bound < 1) throw PreconditionViolated("cross_check: bound must be >= 1");
  const ConstantsReport want = predict(n);
  ConstantsReport r = want;
  r.bound = bound;

  const auto model = DualModel::build(n, bound);
  r.orc_A = components_and_orc(model).orc;
  r.D_A = big_D(n, bound);
  // Orc(M(A)) = D(A) + 1 whenever D(A) >= 1.
  r.orc_MA = r.D_A + 1;
  r.Ks_MA = Rational(static_cast<long long>(r.orc_MA), 2);

  auto check = [&](std::string name, bool holds, std::string detail = {}) {
    r.checks.push_back({std::move(name), holds, std::move(detail)});
  };
  check("Orc(A) = floor(N/2)", r.orc_A == want.orc_A,
        std::to_string(r.orc_A) + " vs " + std::to_string(want.orc_A));
  check("D(A) = ceil(N/2) - 1", r.D_A == want.D_A,
        std::to_string(r.D_A) + " vs " + std::to_string(want.D_A));
  check("D(A) >= 1 so Orc(M(A)) = D(A) + 1 matches prediction",
        r.D_A >= 1 && r.orc_MA == want.orc_MA,
        std::to_string(r.orc_MA) + " vs " + std::to_string(want.orc_MA));
  check("|Orc(A) - D(A)| <= 1", diff(r.orc_A, r.D_A) <= 1);
  check("D(A) <= Orc(A) + 1 and Orc(A) <= D(A) + 1", r.D_A <= r.orc_A + 1 && r.orc_A <= r.D_A + 1);
  check("Orc(A) <= Orc(M(A)) <= Orc(A) + 2", r.orc_A <= r.orc_MA && r.orc_MA <= r.orc_A + 2);
  check("Orc(M(A)) <= D(A) + 1 <= Orc(A) + 2", r.orc_MA <= r.D_A + 1 && r.D_A + 1 <= r.orc_A + 2);
  check("K_s(M(A)) = Orc(M(A)) / 2", r.Ks_MA == Rational(static_cast<long long>(r.orc_MA), 2));

  // K(M(A)) from the merge construction: every certificate must imply the
  // same bound, which must equal K_s(M(A)).
  std::vector<MergeCertificate> merges;
  bool certs_ok = true;
  std::optional<Rational> implied;
  for (const auto& t : sample_triples(n, bound)) {
    auto cert = merge_certificate(n, t[0], t[1], t[2]);
    const auto rep = validate_certificate(cert);
    certs_ok = certs_ok && rep.valid;
    if (implied && *implied != rep.implied_k) certs_ok = false;
    implied = rep.implied_k;
    std::ostringstream ref;
    ref << "merge:case" << cert.case_id << ":" << t[0].to_string() << "|" << t[1].to_string() << "|"
        << t[2].to_string() << ":n=" << cert.claimed_n << ":K<=" << str(rep.implied_k);
    r.certificate_refs.push_back(ref.str());
    merges.push_back(std::move(cert));
  }
  r.K_MA = implied.value_or(Rational(0));
  check("merge certificates valid with one implied K(M(A))", certs_ok);
  check("K(M(A)) = ceil(N/2) / 2", r.K_MA == want.K_MA, str(r.K_MA) + " vs " + str(want.K_MA));
  check("K_s(M(A)) = K(M(A))", r.Ks_MA == r.K_MA, str(r.Ks_MA) + " vs " + str(r.K_MA));

  // Extremal pair: walk upper bound, BFS and chain lower bound all equal
  // floor(N/2).
  const auto zero = Signature::zero(n);
  const auto ones = Signature::ones(n);
  const PointId x = model.class_point(zero);
  const PointId y = model.class_point(ones);
  const std::size_t k = want.orc_A;
  Walk w = walk(zero, ones);
  check("extremal walk valid with length floor(N/2)", !first_invalid_step(w) && w.length() == k,
        "length " + std::to_string(w.length()));
  const Distance d = distance(model, x, y, true);
  check("d(0, 1) = floor(N/2)", d && *d == k, d ? std::to_string(*d) : "inf");
  Chain chain;
  bool chain_ok = false;
  try {
    chain = find_admissible_chain(model, model.space().singleton(x), model.space().singleton(y), k, true);
    chain_ok = chain_lower_bound(model.space(), chain, x, y, model.class_points()) == k;
  } catch (const std::exception& e) {
    check("extremal chain", false, e.what());
  }
  check("extremal chain certifies d(0, 1) >= floor(N/2)", chain_ok);
  r.certificate_refs.push_back("walk:" + zero.to_string() + "->" + ones.to_string() + ":length=" +
                               std::to_string(w.length()));
  r.certificate_refs.push_back("chain:" + zero.to_string() + "->" + ones.to_string() + ":length=" +
                               std::to_string(chain.length()));

  const auto p1 = verify_property1(model);
  check("X^1 closed for closed X (class points closed, relatively discrete)", p1.passed());

  if (artifacts) {
    artifacts->extremal_walk = std::move(w);
    artifacts->extremal_chain = std::move(chain);
    artifacts->merges = std::move(merges);
  }
  return r;
}

}  // namespace motiondual
