#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "zxr/diagram.hpp"
#include "zxr/graphstate.hpp"
#include "zxr/rules.hpp"
#include "zxr/semantics.hpp"
#include "zxr/zxd.hpp"

using namespace zxr;

namespace {

std::vector<NodeId> internal_nodes(const Diagram& d) {
  std::vector<NodeId> out;
  for (const auto& id : d.node_ids())
    if (d.kind(id).kind != Kind::Boundary) out.push_back(id);
  return out;
}

}  // namespace

TEST_CASE("phase arithmetic examples") {
  CHECK(phase_add(Phase(1, 2), Phase(3, 2)) == Phase(0));
  CHECK(phase_add(Phase(1, 2), Phase(1, 2)) == Phase(1));
  CHECK(phase_add(Phase(-1, 2), Phase(0)) == Phase(3, 2));
  CHECK(Phase(2, 4) == Phase(1, 2));
  CHECK(Phase(5) == Phase(1));
  CHECK(Phase(-7, 3) == Phase(5, 3));
  CHECK(Phase::parse("-1/2") == Phase(3, 2));
  CHECK(Phase::parse("3/4").str() == "3/4");
  CHECK(Phase(1, 2).scaled(2) == Phase(1));
  CHECK(Phase(3, 2).scaled(2) == Phase(1));
  CHECK_THROWS(Phase(1, 0));
  CHECK_THROWS(Phase::parse("1/x"));
}

TEST_CASE("phase addition is an abelian group on random rationals") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  for (int k = 0; k < 500; ++k) {
    const Phase a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(phase_add(phase_add(a, b), c) == phase_add(a, phase_add(b, c)));
    CHECK(phase_add(a, b) == phase_add(b, a));
    CHECK(phase_add(a, Phase(0)) == a);
    CHECK(phase_add(a, -a) == Phase(0));
    CHECK(a.num() >= 0);
    CHECK(a.num() < 2 * a.den());
  }
}

TEST_CASE("generator arities") {
  const Diagram e = generator(Generator::EpsZDag);
  CHECK(e.inputs().empty());
  CHECK(e.outputs().size() == 1);
  REQUIRE(internal_nodes(e).size() == 1);
  CHECK(e.kind(internal_nodes(e)[0]) == NodeKind::z());

  const Diagram w = generator(Generator::Wire);
  CHECK(w.inputs().size() == 1);
  CHECK(w.outputs().size() == 1);
  CHECK(internal_nodes(w).empty());

  const Diagram p = generator(Generator::PX, Phase(1));
  CHECK(p.inputs().size() == 1);
  CHECK(p.outputs().size() == 1);
  REQUIRE(internal_nodes(p).size() == 1);
  CHECK(p.kind(internal_nodes(p)[0]) == NodeKind::x(Phase(1)));

  CHECK(generator(Generator::DeltaZ).outputs().size() == 2);
  CHECK(generator(Generator::DeltaZ).inputs().size() == 1);
  CHECK(generator(Generator::EpsX).outputs().empty());
  CHECK(generator(Generator::H).inputs().size() == 1);
  CHECK_THROWS_AS(generator(Generator::DeltaX, Phase(1, 2)), std::invalid_argument);
}

TEST_CASE("compose examples") {
  const Diagram w = generator(Generator::Wire);
  CHECK(iso_equal(compose(w, w), w));

  const Diagram h = generator(Generator::H);
  const Diagram hh = compose(h, h);
  CHECK(internal_nodes(hh).size() == 2);
  CHECK(oracle::proportional(evaluate(hh), oracle::id()));

  const Diagram p = generator(Generator::PZ, Phase(1, 2));
  const Diagram pp = compose(p, p);
  CHECK(internal_nodes(pp).size() == 2);
  CHECK(iso_equal(normalize(pp), generator(Generator::PZ, Phase(1))));

  CHECK_THROWS_AS(compose(w, generator(Generator::DeltaZ)), std::invalid_argument);
}

TEST_CASE("tensor examples") {
  const Diagram w = generator(Generator::Wire);
  const Diagram ww = tensor(w, w);
  CHECK(ww.inputs().size() == 2);
  CHECK(ww.outputs().size() == 2);
  CHECK(oracle::proportional(evaluate(ww), oracle::id(4)));

  const Diagram st = tensor(generator(Generator::EpsZDag), generator(Generator::EpsXDag));
  CHECK(st.inputs().empty());
  CHECK(st.outputs().size() == 2);
  CHECK(oracle::proportional(evaluate(st), oracle::kron(oracle::plus(), oracle::ket(0))));

  const Diagram f = generator(Generator::DeltaX);
  CHECK(iso_equal(tensor(Diagram{}, f), f));
}

TEST_CASE("dagger examples") {
  CHECK(iso_equal(dagger(generator(Generator::EpsZ)), generator(Generator::EpsZDag)));
  CHECK(iso_equal(dagger(generator(Generator::H)), generator(Generator::H)));
  CHECK(iso_equal(dagger(generator(Generator::PZ, Phase(1, 2))), generator(Generator::PZ, Phase(3, 2))));
  const Diagram g = graph_state(triangle_graph());
  CHECK(iso_equal(dagger(dagger(g)), g));
}

TEST_CASE("iso_equal examples") {
  const Diagram f = generator(Generator::PZ, Phase(1, 2));
  CHECK(iso_equal(f, f));
  CHECK_FALSE(iso_equal(f, generator(Generator::PX, Phase(1, 2))));

  // The same triangle graph state under a renaming of its internal nodes.
  const Diagram a = graph_state(triangle_graph());
  const Diagram b = parse_zxd(R"(
node p z
node q z
node r z
node e1 h
node e2 h
node e3 h
out o1 o2 o3
edge p o1
edge q o2
edge r o3
edge p e2
edge q e2
edge q e3
edge r e3
edge p e1
edge r e1
)");
  CHECK(iso_equal(a, b));
  // Swapping two outputs breaks the index-wise boundary match only when the picture is asymmetric.
  const Diagram c = parse_zxd("node a z 1/2\nnode b z\nout o1 o2\nedge a o2\nedge b o1\n");
  const Diagram c2 = parse_zxd("node a z 1/2\nnode b z\nout o1 o2\nedge a o1\nedge b o2\n");
  CHECK_FALSE(iso_equal(c, c2));
}

TEST_CASE("zxd parsing") {
  const Diagram s = parse_zxd("node a z 1/2\nin\nout o\nedge a o\n");
  CHECK(s.inputs().empty());
  CHECK(s.outputs().size() == 1);
  oracle::M v(2, 1);
  v << 1, oracle::I;
  CHECK(oracle::proportional(evaluate(s), v));

  CHECK_THROWS_AS(parse_zxd("node a h\nedge a a\n"), ParseError);
  try {
    parse_zxd("node a z\n# comment\nnode b q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 8);
  }
  CHECK_THROWS_AS(parse_zxd("node a z\nedge a b\n"), ParseError);
  CHECK_THROWS_AS(parse_zxd("node a z 1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_zxd("in i\nout o\nedge i o\nedge i o\n"), ParseError);
}

TEST_CASE("zxd round trip") {
  const char* texts[] = {
      "# parallel edges and a loop\nnode b x 3/4\nnode a z -1/2\nin i\nout o\nedge a b\nedge b a\nedge a a\nedge i a\nedge b o\n",
      "in i\nout o\nedge o i\n",
      "node h h\nnode s z\nout o\nedge s h\nedge h o\n",
  };
  for (const char* t : texts) {
    const std::string n = normalize_text(t);
    CHECK(serialize_zxd(parse_zxd(t)) == n);
    CHECK(serialize_zxd(parse_zxd(n)) == n);
    CHECK(iso_equal(parse_zxd(n), parse_zxd(t)));
  }
  CHECK(normalize_text("node b z\nnode a x 1\nout p q\nedge b p\nedge q a\n") ==
        "node a x 1\nnode b z\nin\nout p q\nedge a q\nedge b p\n");
}

TEST_CASE("dot export carries colours and phases") {
  const std::string dot = to_dot(parse_zxd("node a z 1/2\nnode b x\nnode h h\nin i\nout o\nedge i a\nedge a h\nedge h b\nedge b o\n"));
  CHECK(dot.find("fillcolor=green") != std::string::npos);
  CHECK(dot.find("fillcolor=red") != std::string::npos);
  CHECK(dot.find("shape=square") != std::string::npos);
  CHECK(dot.find("π/2") != std::string::npos);
}

TEST_CASE("diagram invariants") {
  Diagram d;
  const NodeId h = d.add_node(NodeKind::h());
  const NodeId i = d.add_input();
  d.add_edge(i, h);
  CHECK_THROWS_AS(d.validate(), InvariantError);
  const NodeId z = d.add_node(NodeKind::z());
  d.add_edge(h, z);
  CHECK_NOTHROW(d.validate());
  CHECK_THROWS_AS(d.add_node(z, NodeKind::x()), InvariantError);
  d.remove_node(z);
  CHECK_FALSE(d.has_node(z));
  CHECK(d.fresh_id() != z);
}
