#include <doctest.h>

#include <json.hpp>

#include "hilbzeta/errors.hpp"
#include "render.hpp"

using namespace hz;
using render::Format;

TEST_CASE("tree json schema and round trip") {
  auto t = build_tree(make_semigroup({2, 3}), 2);
  const auto text = render::tree(t, Format::Json);
  auto j = nlohmann::json::parse(text);
  CHECK(j["levels"].size() == 2);
  CHECK(j["levels"][1].size() == 2);
  CHECK(j["edges"][1] == nlohmann::json::array({0, 0}));
  CHECK(j["levels"][0][0]["gens"] == nlohmann::json::array({2, 3}));
  CHECK(j.dump(2) + "\n" == text);
  CHECK(render::tree(t, Format::Json) == text);
}

TEST_CASE("dot output labels") {
  auto t = build_tree(make_semigroup({3, 4}), 2);
  const auto dot = render::tree(t, Format::Dot);
  CHECK(dot.find("label=\"(3,4)\"") != std::string::npos);
  CHECK(dot.find("label=\"d_2\"") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
}

TEST_CASE("zeta renderers") {
  auto S = make_semigroup({3, 4});
  auto z = zeta_series(S, 10);
  CHECK(render::zeta(*S, z, Format::Text).find("Z(q) = (1 + Lq^2 + L^2q^3 + L^2q^4 + L^3q^6) / (1 - q)") != std::string::npos);
  auto j = nlohmann::json::parse(render::zeta(*S, z, Format::Json));
  CHECK(j["coeffs"][6] == nlohmann::json::parse(R"([{"L_power":0,"coeff":1},{"L_power":1,"coeff":1},{"L_power":2,"coeff":2},{"L_power":3,"coeff":1}])"));
  CHECK(j["stabilization_level"] == 6);
  CHECK(render::zeta(*S, z, Format::Csv).rfind("ell,L_power,coeff\n", 0) == 0);
  CHECK_THROWS_AS(render::zeta(*S, z, Format::Dot), Error);
}

TEST_CASE("genzeta and report renderers") {
  auto S = make_semigroup({2, 3});
  auto g = motivic_gen_zeta(S, 2);
  auto text = render::genzeta(*S, g, homfly_pq(2, 3), Format::Text);
  CHECK(text.find("HOMFLY: a^2q^-2 + a^2q^2 - a^4") != std::string::npos);
  auto j = nlohmann::json::parse(render::genzeta(*S, g, std::nullopt, Format::Json));
  CHECK(j["rows"].size() == 3);
  CHECK_FALSE(j.contains("homfly"));
  auto rep = verify_classes(S, 2, {2});
  auto rj = nlohmann::json::parse(render::report(rep, Format::Json));
  CHECK(rj["mismatches"] == 0);
  CHECK(rj["rows"].size() == rep.rows.size());
  CHECK(render::parse_format("latex") == Format::Latex);
  CHECK_FALSE(render::parse_format("yaml").has_value());
}
