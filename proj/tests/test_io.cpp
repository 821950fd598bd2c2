#include <gtest/gtest.h>

#include <functional>

#include "crsf/io.hpp"

using crsf::Errc;
using crsf::Rational;
using nlohmann::json;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const crsf::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no crsf::Error thrown";
  return Errc::DomainError;
}

}  // namespace

TEST(Io, SeifertFromJsonFiles) {
  const auto s3 = crsf::io::seifert_from_json(crsf::io::read_json_file(CRSF_DATA_DIR "/sphere.json"));
  EXPECT_EQ(s3, crsf::sphere());
  const auto lens = crsf::io::seifert_from_json(crsf::io::read_json_file(CRSF_DATA_DIR "/lens_3_2.json"));
  EXPECT_EQ(lens, crsf::lens_space(3, 2));
}

TEST(Io, SeifertRoundTrip) {
  const auto lens = crsf::lens_space(7, 3);
  EXPECT_EQ(crsf::io::seifert_from_json(crsf::io::seifert_to_json(lens)), lens);
}

TEST(Io, SchemaViolations) {
  EXPECT_EQ(code_of([] { (void)crsf::io::seifert_from_json(json::array()); }), Errc::Schema);
  EXPECT_EQ(code_of([] { (void)crsf::io::seifert_from_json(json{{"genus", 0}}); }), Errc::Schema);
  EXPECT_EQ(code_of([] { (void)crsf::io::seifert_from_json(json{{"degree", "-1"}}); }), Errc::Schema);
  EXPECT_EQ(code_of([] { (void)crsf::io::seifert_from_json(json{{"degree", "-1"}, {"genus", 0}, {"chi_orb", "2"}}); }),
            Errc::Schema);
  EXPECT_EQ(code_of([] { (void)crsf::io::seifert_from_json(json{{"degree", "x"}, {"genus", 0}}); }), Errc::Schema);
  EXPECT_EQ(code_of([] { (void)crsf::io::seifert_from_json(json{{"degree", 0.5}, {"genus", 0}}); }), Errc::Schema);
  EXPECT_EQ(code_of([] {
              (void)crsf::io::seifert_from_json(json{{"degree", "-1"}, {"genus", 0}, {"cone_points", {{{"alpha", 3}}}}});
            }),
            Errc::Schema);
  EXPECT_EQ(code_of([] { (void)crsf::io::read_json_file(CRSF_DATA_DIR "/missing.json"); }), Errc::Schema);
}

TEST(Io, NotPseudoconvexFile) {
  const json j = crsf::io::read_json_file(CRSF_DATA_DIR "/not_pseudoconvex.json");
  EXPECT_EQ(code_of([&] { (void)crsf::io::seifert_from_json(j); }), Errc::NotPseudoconvex);
}

TEST(Io, ModesAndHolo) {
  const auto modes = crsf::io::modes_from_json(crsf::io::read_json_file(CRSF_DATA_DIR "/sphere_modes.json"));
  EXPECT_EQ(modes.size(), 28U);
  const auto holo = crsf::io::holo_from_json(crsf::io::read_json_file(CRSF_DATA_DIR "/sphere_holo.json"));
  EXPECT_EQ(holo.h0.at(6), 7);
  EXPECT_EQ(holo.h2.at(6), 5);
  const auto back = crsf::io::modes_from_json(crsf::io::modes_to_json(modes));
  ASSERT_EQ(back.size(), modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) {
    EXPECT_EQ(back[i].k, modes[i].k);
    EXPECT_EQ(back[i].n, modes[i].n);
    EXPECT_EQ(back[i].mult, modes[i].mult);
  }
  const auto holo2 = crsf::io::holo_from_json(crsf::io::holo_to_json(holo));
  EXPECT_EQ(holo2.h0, holo.h0);
  EXPECT_EQ(holo2.h2, holo.h2);
}

TEST(Io, ModeSchema) {
  EXPECT_EQ(code_of([] { (void)crsf::io::modes_from_json(json::object()); }), Errc::Schema);
  EXPECT_EQ(code_of([] { (void)crsf::io::modes_from_json(json::parse(R"([{"k": "1"}])")); }), Errc::Schema);
  const auto m = crsf::io::modes_from_json(json::parse(R"([{"k": 2.5, "n": 1, "mult": 2}])"));
  EXPECT_FALSE(m[0].k.is_exact());
  EXPECT_EQ(code_of([] { (void)crsf::io::holo_from_json(json::parse(R"({"h0": {"x": 1}})")); }), Errc::Schema);
  EXPECT_EQ(code_of([] { (void)crsf::io::holo_from_json(json::parse(R"({"h0": {"1": -1}})")); }), Errc::DomainError);
}

TEST(Io, LinesToCsv) {
  const crsf::LineSet lines{{Rational(-2), 1, crsf::Family::minus, "k=4;n=0", 0},
                            {Rational(4), 1, crsf::Family::plus, "k=4;n=0", 0}};
  EXPECT_EQ(crsf::io::lines_to_csv(lines), "value,mult,family,origin\n-2,1,minus,k=4;n=0\n4,1,plus,k=4;n=0\n");
}
