#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graph_doc.hpp"
#include "parse.hpp"

using namespace ofc;

namespace {

template <class Fn>
std::optional<errc> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return std::nullopt;
}

Rat random_rat(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  long a = num(rng);
  if (nonzero && a == 0) a = 1;
  return Rat(a, den(rng));
}

SeriesRat random_exact_series(std::mt19937_64& rng) {
  static const std::vector<Rat> exponents = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0),
                                             Rat(1, 3), Rat(1, 2), Rat(1), Rat(2), Rat(7, 2)};
  std::uniform_int_distribution<int> n_terms(0, 5);
  std::uniform_int_distribution<std::size_t> pick(0, exponents.size() - 1);
  std::vector<SeriesRat::Term> terms;
  int n = n_terms(rng);
  for (int i = 0; i < n; ++i) terms.push_back({exponents[pick(rng)], random_rat(rng, true)});
  return SeriesRat::from_terms(terms);
}

}  // namespace

TEST_CASE("parse element examples") {
  SeriesRat e = parse_element<SeriesRat>("e^1");
  CHECK(e == SeriesRat::eps_pow(Rat(1)));

  SeriesRat s = parse_element<SeriesRat>("1 - 1/2*e + 1/4*e^2");
  REQUIRE(s.terms().size() == 3);
  CHECK(s.coeff_at(Rat(0)) == Rat(1));
  CHECK(s.coeff_at(Rat(1)) == Rat(-1, 2));
  CHECK(s.coeff_at(Rat(2)) == Rat(1, 4));

  SeriesRat f = parse_element<SeriesRat>("2 + e^(1/2)");
  REQUIRE(f.terms().size() == 2);
  CHECK(f.coeff_at(Rat(0)) == Rat(2));
  CHECK(f.coeff_at(Rat(1, 2)) == Rat(1));
}

TEST_CASE("parse handles whitespace, merging and signs") {
  CHECK(parse_element<SeriesRat>("  e + e ") == SeriesRat::monomial(Rat(2), Rat(1)));
  CHECK(parse_element<SeriesRat>("e - e") == SeriesRat::zero());
  CHECK(parse_element<SeriesRat>("3 * e ^ 2") == SeriesRat::monomial(Rat(3), Rat(2)));
  CHECK(parse_element<SeriesRat>("e^(-1)") == SeriesRat::eps_pow(Rat(-1)));
  CHECK(parse_element<SeriesRat>("e^(-3/2)") == SeriesRat::eps_pow(Rat(-3, 2)));
  CHECK(parse_element<SeriesRat>("-e^1 + 1") ==
        SeriesRat::one() - SeriesRat::eps_pow(Rat(1)));
  CHECK(parse_element<SeriesRat>("0") == SeriesRat::zero());
  CHECK(parse_element<SeriesRat>("0*e^5") == SeriesRat::zero());
  CHECK(parse_element<SeriesRat>("e^((2))") == SeriesRat::eps_pow(Rat(2)));
}

TEST_CASE("parse scalar backends") {
  CHECK(parse_element<Rat>("5/6") == Rat(5, 6));
  CHECK(parse_element<Rat>("-2/4") == Rat(-1, 2));
  CHECK(parse_element<Rat>("1 + 1/2") == Rat(3, 2));
  CHECK(parse_element<FloatReal>("1/2").value() == 0.5);
  CHECK(thrown_code([] { parse_element<Rat>("e^1"); }) == errc::backend_mismatch);
  CHECK(thrown_code([] { parse_element<FloatReal>("1 + e"); }) == errc::backend_mismatch);
}

TEST_CASE("parse rejects malformed input with positions") {
  for (const char* bad : {"", "1 +", "e^", "1//2", "(", "abc", "1 * 2", "e^()",
                          "+", "1 - - 2", "e**e", "2e", "1/"}) {
    auto code = thrown_code([&] { parse_element<SeriesRat>(bad); });
    CHECK(code == errc::syntax_error);
  }
  CHECK(thrown_code([] { parse_element<SeriesRat>("e^(1/0)"); }) == errc::syntax_error);
  CHECK(thrown_code([] { parse_element<SeriesRat>("1/0"); }) == errc::syntax_error);
  try {
    parse_element<SeriesRat>("1 + &");
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
  }
}

TEST_CASE("format element examples") {
  CHECK(format_element(SeriesRat::eps_pow(Rat(1))) == "e^1");
  CHECK(format_element(SeriesRat::zero()) == "0");
  SeriesRat s = SeriesRat::one() - SeriesRat::monomial(Rat(1, 2), Rat(1));
  CHECK(format_element(s) == "1 - 1/2*e^1");
  CHECK(format_element(parse_element<SeriesRat>("1 - 1/2*e + 1/4*e^2")) ==
        "1 - 1/2*e^1 + 1/4*e^2");
  CHECK(format_element(SeriesRat::eps_pow(Rat(-1))) == "e^(-1)");
  CHECK(format_element(SeriesRat::eps_pow(Rat(1, 2))) == "e^(1/2)");
  CHECK(format_element(-SeriesRat::eps_pow(Rat(2))) == "-e^2");
  CHECK(format_element(SeriesRat::monomial(Rat(-2, 3), Rat(0))) == "-2/3");
  CHECK(format_element(Rat(5, 6)) == "5/6");
  CHECK(format_element(Rat(-7)) == "-7");
  CHECK(format_element(FloatReal(0.5)) == "1/2");
  CHECK(format_element(FloatReal(1.0 / 3.0)) == "1/3");
  CHECK(format_element(FloatReal(-0.25)) == "-1/4");
}

TEST_CASE("round trip over random elements per backend") {
  std::mt19937_64 rng(20260814);

  for (int i = 0; i < 1000; ++i) {
    Rat r = random_rat(rng);
    CHECK(parse_element<Rat>(format_element(r)) == r);
  }

  std::uniform_real_distribution<double> real(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    double v = real(rng);
    FloatReal f(v);
    CHECK(parse_element<FloatReal>(format_element(f)).value() == v);
  }

  for (int i = 0; i < 1000; ++i) {
    SeriesRat s = random_exact_series(rng);
    SeriesRat back = parse_element<SeriesRat>(format_element(s));
    CHECK(back == s);
  }

  for (int i = 0; i < 1000; ++i) {
    SeriesRat proto = random_exact_series(rng);
    std::vector<SeriesFloat::Term> terms;
    for (const auto& t : proto.terms()) {
      terms.push_back({t.exponent, FloatReal::from_rat(t.coeff)});
    }
    SeriesFloat s = SeriesFloat::from_terms(terms);
    SeriesFloat back = parse_element<SeriesFloat>(format_element(s));
    REQUIRE(back.terms().size() == s.terms().size());
    for (std::size_t k = 0; k < s.terms().size(); ++k) {
      CHECK(back.terms()[k].exponent == s.terms()[k].exponent);
      CHECK(back.terms()[k].coeff.value() == s.terms()[k].coeff.value());
    }
  }
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    SeriesRat s = random_exact_series(rng);
    std::string once = format_element(s);
    CHECK(format_element(parse_element<SeriesRat>(once)) == once);
  }
  // non-canonical input normalizes
  CHECK(format_element(parse_element<SeriesRat>("e^2+1/1*e^1 +0+ 2/4")) ==
        "1/2 + e^1 + e^2");
}

TEST_CASE("fuzzed garbage never crashes and only raises structured errors") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> len(0, 24);
  const std::string alphabet = "0123456789e^*/+-() .abz";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int parsed = 0, rejected = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int n = len(rng);
    for (int k = 0; k < n; ++k) s.push_back(alphabet[pick(rng)]);
    try {
      parse_element<SeriesRat>(s);
      ++parsed;
    } catch (const error& e) {
      CHECK(e.code() == errc::syntax_error);
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 3000);
  CHECK(rejected > 0);
}

TEST_CASE("graph document parsing") {
  const std::string triangle = R"({
    "field": "lc-rational",
    "vertices": ["x", "y", "z"],
    "edges": [
      {"u": "x", "v": "y", "w": "e^1"},
      {"u": "x", "v": "z", "w": "1"},
      {"u": "y", "v": "z", "w": "1"}
    ]
  })";
  GraphDoc doc = parse_graph_doc(triangle);
  CHECK(doc.field == backend::lc_rational);
  CHECK(doc.vertices == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(doc.edges.size() == 3);
  CHECK(doc.edges[0].w == "e^1");
  CHECK_FALSE(doc.truncation_order.has_value());
}

TEST_CASE("graph document validation errors are distinct") {
  auto wrap = [](const std::string& edges) {
    return R"({"field": "rational", "vertices": ["x", "y", "z"], "edges": [)" + edges + "]}";
  };
  CHECK(thrown_code([&] { parse_graph_doc(wrap(R"({"u":"x","v":"x","w":"1"})")); }) ==
        errc::self_loop);
  CHECK(thrown_code([&] {
          parse_graph_doc(wrap(R"({"u":"x","v":"y","w":"1"},{"u":"y","v":"x","w":"2"})"));
        }) == errc::duplicate_edge);
  CHECK(thrown_code([&] { parse_graph_doc(wrap(R"({"u":"x","v":"q","w":"1"})")); }) ==
        errc::unknown_vertex);
  CHECK(thrown_code([] { parse_graph_doc("{not json"); }) == errc::syntax_error);
  CHECK(thrown_code([] { parse_graph_doc(R"({"vertices": [], "edges": []})") ; }) ==
        errc::syntax_error);
  CHECK(thrown_code([] {
          parse_graph_doc(R"({"field": "decimal", "vertices": [], "edges": []})");
        }) == errc::invalid_argument);
  CHECK(thrown_code([] {
          parse_graph_doc(R"({"field": "rational", "vertices": ["x", "x"], "edges": []})");
        }) == errc::invalid_argument);
  CHECK(thrown_code([] {
          parse_graph_doc(R"({"field": "rational", "vertices": [""], "edges": []})");
        }) == errc::invalid_argument);
}

TEST_CASE("graph document truncation order") {
  auto with_trunc = [](const std::string& t) {
    return R"({"field": "lc-rational", "truncation_order": )" + t +
           R"(, "vertices": ["x"], "edges": []})";
  };
  CHECK(parse_graph_doc(with_trunc("\"8\"")).truncation_order == Rat(8));
  CHECK(parse_graph_doc(with_trunc("\"17/2\"")).truncation_order == Rat(17, 2));
  CHECK(parse_graph_doc(with_trunc("8")).truncation_order == Rat(8));
  CHECK(thrown_code([&] { parse_graph_doc(with_trunc("\"0\"")); }) == errc::invalid_argument);
  CHECK(thrown_code([&] { parse_graph_doc(with_trunc("\"-1\"")); }) == errc::invalid_argument);
  CHECK(thrown_code([&] { parse_graph_doc(with_trunc("1.5")); }) == errc::syntax_error);
}

TEST_CASE("graph document serialization round-trips") {
  GraphDoc doc;
  doc.field = backend::lc_rational;
  doc.truncation_order = Rat(8);
  doc.vertices = {"x", "y", "z"};
  doc.edges = {{"x", "y", "e^1"}, {"x", "z", "1"}, {"y", "z", "1"}};
  std::string text = graph_doc_to_json(doc);
  GraphDoc back = parse_graph_doc(text);
  CHECK(back.field == doc.field);
  CHECK(back.truncation_order == doc.truncation_order);
  CHECK(back.vertices == doc.vertices);
  REQUIRE(back.edges.size() == doc.edges.size());
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    CHECK(back.edges[i].u == doc.edges[i].u);
    CHECK(back.edges[i].v == doc.edges[i].v);
    CHECK(back.edges[i].w == doc.edges[i].w);
  }
  // serialization is deterministic
  CHECK(graph_doc_to_json(back) == text);
}
