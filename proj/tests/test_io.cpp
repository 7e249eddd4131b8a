#include "doctest.h"

#include "motiondual/errors.hpp"
#include "motiondual/io.hpp"

using namespace motiondual;

namespace {

Signature sig(std::initializer_list<int> e, int n) { return Signature::validate(e, n); }

}  // namespace

TEST_CASE("text parsing") {
  CHECK(io::parse_signature("2,1,0", 7) == sig({2, 1, 0}, 7));
  CHECK(io::parse_signature(" 2, -1 ", 4) == sig({2, -1}, 4));
  CHECK(io::parse_signature("", 1).size() == 0);
  CHECK_THROWS_AS(io::parse_signature("2,x", 5), ParseError);
  CHECK_THROWS_AS(io::parse_signature("1,2", 5), SignatureError);
  CHECK_THROWS_AS(io::parse_signature("1", 5), SignatureError);
  CHECK(io::parse_group("so5").n() == 5);
  CHECK(io::parse_group("SO12").n() == 12);
  CHECK_THROWS_AS(io::parse_group("su3"), ParseError);

  CHECK(io::rational_to_string(Rational(3, 2)) == "3/2");
  CHECK(io::rational_to_string(Rational(2)) == "2");
  CHECK(io::parse_rational("5/2") == Rational(5, 2));
  CHECK(io::parse_rational("3") == Rational(3));
  CHECK_THROWS_AS(io::parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(io::parse_rational("a/b"), ParseError);
}

TEST_CASE("signature and walk round trips") {
  const auto s = sig({3, 1, -1}, 6);
  const auto j = io::signature_to_json(s);
  CHECK(j["n"] == 6);
  CHECK(j["entries"] == io::json::array({3, 1, -1}));
  CHECK(io::signature_from_json(j) == s);
  CHECK_THROWS(io::signature_from_json(io::json{{"n", 6}, {"entries", {1, 2, 0}}}));

  const auto w = walk(Signature::zero(9), Signature::ones(9));
  const auto wj = io::walk_to_json(w);
  CHECK(wj["length"] == w.length());
  const auto back = io::walk_from_json(wj);
  CHECK(back.steps == w.steps);
  CHECK(back.witnesses == w.witnesses);
}

TEST_CASE("chain round trip") {
  const auto m = DualModel::build(7, 1);
  const auto& sp = m.space();
  const auto x = m.class_point(Signature::zero(7));
  const auto y = m.class_point(Signature::ones(7));
  const auto chain = find_admissible_chain(m, sp.singleton(x), sp.singleton(y), 3, true);
  const auto j = io::chain_to_json(chain);
  CHECK(j["length"] == 3);
  CHECK(io::chain_from_json(j, sp.size()).sets == chain.sets);
  CHECK_THROWS(io::chain_from_json(j, 2));

  const io::ChainCertificate cert{7, 1, Signature::zero(7), Signature::ones(7), chain};
  const auto back = io::chain_certificate_from_json(io::chain_certificate_to_json(cert));
  CHECK(back.n == 7);
  CHECK(back.bound == 1);
  CHECK(back.from == cert.from);
  CHECK(back.to == cert.to);
  CHECK(back.chain.sets == chain.sets);
}

TEST_CASE("merge certificate round trip") {
  for (int n : {3, 4, 5, 6, 9, 10}) {
    const auto pool = enumerate(n - 1, 2);
    const auto c = merge_certificate(n, pool.front(), pool[pool.size() / 2], pool.back());
    const auto j = io::certificate_to_json(c);
    const auto back = io::certificate_from_json(j);
    CHECK(back.n == c.n);
    CHECK(back.case_id == c.case_id);
    CHECK(back.inputs == c.inputs);
    CHECK(back.containers == c.containers);
    CHECK(back.targets == c.targets);
    CHECK(back.primal_witness == c.primal_witness);
    CHECK(back.claimed_n == c.claimed_n);
    REQUIRE(back.walks.size() == c.walks.size());
    for (std::size_t i = 0; i < c.walks.size(); ++i) CHECK(back.walks[i].steps == c.walks[i].steps);
    CHECK(validate_certificate(back).valid);
    const auto rj = io::certificate_report_to_json(validate_certificate(back));
    CHECK(rj["valid"] == true);
  }
}

TEST_CASE("report round trip") {
  for (int n : {3, 8, 11}) {
    const auto r = cross_check(n, 1);
    const auto j = io::report_to_json(r);
    CHECK(j["K_MA"].is_string());
    CHECK(io::report_from_json(j) == r);
  }
  const auto p = predict(2);
  CHECK(io::report_from_json(io::report_to_json(p)) == p);
}

TEST_CASE("model json and dot") {
  const auto m = DualModel::build(4, 1);
  const auto j = io::model_to_json(m);
  CHECK(j["points"].size() == m.space().size());
  const auto sp = io::space_from_json(j);
  REQUIRE(sp.size() == m.space().size());
  for (PointId p = 0; p < sp.size(); ++p) {
    CHECK(sp.closure(p) == m.space().closure(p));
    CHECK(sp.label(p) == m.space().label(p));
  }

  const auto dot = io::model_to_dot(m);
  CHECK(dot.rfind("graph so4_dual {", 0) == 0);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("shape=ellipse") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.back() == '\n');

  const StarGraph g(5, 1);
  const auto gj = io::star_graph_to_json(g);
  CHECK(gj.dump().find("\"line_kernel\"") != std::string::npos);
  CHECK(io::star_graph_to_dot(g).rfind("graph so5_sub {", 0) == 0);
}

TEST_CASE("table") {
  const std::vector<ConstantsReport> rows{predict(2), cross_check(7, 1)};
  const auto t = io::render_table(rows);
  CHECK(t.find("K(M)") != std::string::npos);
  CHECK(t.find("quoted") != std::string::npos);
  CHECK(t.find("ok") != std::string::npos);
  CHECK(t.find("FAILED") == std::string::npos);
}
