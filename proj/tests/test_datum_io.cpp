#include <gtest/gtest.h>

#include <filesystem>

#include "minsurf/catalog.hpp"
#include "minsurf/datum_io.hpp"
#include "minsurf/errors.hpp"

using namespace minsurf;

TEST(DatumIo, RoundTripEveryCatalogEntry) {
  for (const auto& e : full_catalog()) {
    const DatumDocument doc = to_document(e.data);
    const std::string text = serialize_datum(doc);
    const DatumDocument back = parse_datum(text);
    EXPECT_EQ(back, doc) << e.name;
    EXPECT_EQ(serialize_datum(back), text);

    const WeierstrassData w = to_datum(back);
    EXPECT_EQ(w.n(), e.data.n());
    EXPECT_EQ(w.punctures().size(), e.data.punctures().size());
    const Complex z(0.37, -0.21);
    const auto a = w.eval(z), b = e.data.eval(z);
    for (int j = 0; j < w.n(); ++j) EXPECT_LE(std::abs(a[j] - b[j]), 1e-14 * (1 + std::abs(b[j])));
  }
}

TEST(DatumIo, SyntaxErrorCarriesPosition) {
  try {
    parse_datum("{\n  \"n\": 3,\n  \"components\": [ , ]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(DatumIo, SchemaErrors) {
  EXPECT_THROW(parse_datum("[]"), ParseError);
  EXPECT_THROW(parse_datum(R"({"components": []})"), ParseError);
  EXPECT_THROW(parse_datum(R"({"n": 2, "components": [{"num": [[1,0]], "den": [[1,0]]}]})"), ParseError);
  EXPECT_THROW(parse_datum(R"({"n": 1, "components": [{"num": [[1]], "den": [[1,0]]}]})"), ParseError);
  EXPECT_THROW(parse_datum(R"({"n": 1, "components": [{"num": [[1,0]]}]})"), ParseError);
}

TEST(DatumIo, PuncturesAndBasepoint) {
  const DatumDocument doc = parse_datum(R"({
    "n": 3, "label": "cat",
    "components": [
      {"num": [[1,0],[0,0],[-1,0]], "den": [[0,0],[0,0],[2,0]]},
      {"num": [[0,1],[0,0],[0,1]], "den": [[0,0],[0,0],[2,0]]},
      {"num": [[1,0]], "den": [[0,0],[1,0]]}
    ],
    "punctures": [[0,0], "inf"],
    "basepoint": [1,0]
  })");
  ASSERT_TRUE(doc.punctures);
  EXPECT_EQ(doc.punctures->size(), 2u);
  EXPECT_TRUE((*doc.punctures)[1].is_infinite());
  const WeierstrassData w = to_datum(doc);
  EXPECT_EQ(w.basepoint(), Complex(1.0));
  EXPECT_EQ(w.label(), "cat");
}

TEST(DatumIo, FileErrors) {
  EXPECT_THROW(read_datum_file("/nonexistent/dir/x.json"), IoError);
  EXPECT_THROW(write_datum_file("/nonexistent/dir/x.json", to_document(plane().data)), IoError);
}
