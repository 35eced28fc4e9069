#include <doctest.h>

#include <sstream>

#include "ppcd/catalog.hpp"

using namespace ppcd;

namespace {
const Catalog& cat() {
  static Catalog c = Catalog::load_default();
  return c;
}
}  // namespace

TEST_CASE("is_weighing accepts exactly the orthogonal constant-weight case") {
  IntMatrix h2 = {{1, 1}, {1, -1}};
  CHECK(is_weighing(h2, 2));
  CHECK_FALSE(is_weighing(h2, 1));

  IntMatrix w22 = {{1, 1}, {1, 1}};
  CHECK_FALSE(is_weighing(w22, 2));

  IntMatrix uneven = {{1, 0}, {1, -1}};  // column weights differ
  CHECK_FALSE(is_weighing(uneven, 1));

  IntMatrix w43 = {{0, 1, 1, 1}, {1, 0, 1, -1}, {1, -1, 0, 1}, {1, 1, -1, 0}};
  CHECK(is_weighing(w43, 3));
}

TEST_CASE("every embedded catalog record is a verified weighing matrix") {
  REQUIRE_FALSE(cat().entries().empty());
  for (const auto& e : cat().entries()) {
    CAPTURE(e.order);
    CAPTURE(e.weight);
    CHECK(is_weighing(e.entries, e.weight));
  }
}

TEST_CASE("a corrupt catalog record is rejected at parse time") {
  std::istringstream in(
      "matrix 2 2 fabricated\n"
      "++\n"
      "++\n");
  CHECK_THROWS(Catalog::parse(in, "corrupt"));

  std::istringstream bad_symbol(
      "matrix 2 2 fabricated\n"
      "+x\n"
      "+-\n");
  CHECK_THROWS(Catalog::parse(bad_symbol, "corrupt"));
}

TEST_CASE("hadamard construction covers the orders the tables need") {
  for (int r : {1, 2, 4, 8, 12, 16, 20, 24}) {
    auto h = cat().hadamard(r);
    REQUIRE(h.has_value());
    CHECK(is_weighing(h->entries, r));
  }
  CHECK_FALSE(cat().hadamard(3).has_value());
  CHECK_FALSE(cat().hadamard(6).has_value());
}

TEST_CASE("weighing serves the identity, H2-block, and literal families") {
  auto w1 = cat().weighing(5, 1);
  REQUIRE(w1.has_value());
  CHECK(w1->entries == scaled_identity(5, 1));

  auto w2 = cat().weighing(6, 2);
  REQUIRE(w2.has_value());
  CHECK(is_weighing(w2->entries, 2));
  CHECK_FALSE(cat().weighing(7, 2).has_value());  // odd order, weight 2

  auto w65 = cat().weighing(6, 5);
  REQUIRE(w65.has_value());
  CHECK(is_weighing(w65->entries, 5));

  // orders the literal catalog deliberately leaves out
  CHECK_FALSE(cat().weighing(12, 3).has_value());
  CHECK_FALSE(cat().weighing(12, 6).has_value());
  CHECK_FALSE(cat().weighing(9, 4).has_value());
}

TEST_CASE("h_of returns the smallest usable Hadamard order") {
  CHECK(cat().h_of(1) == 1);
  CHECK(cat().h_of(2) == 2);
  CHECK(cat().h_of(3) == 4);
  CHECK(cat().h_of(4) == 4);
  CHECK(cat().h_of(5) == 8);
  CHECK(cat().h_of(6) == 8);
  CHECK(cat().h_of(7) == 8);
  CHECK(cat().h_of(8) == 8);
}

TEST_CASE("weighing_orders_up_to lists available orders in ascending order") {
  CHECK(cat().weighing_orders_up_to(3, 10) == std::vector<int>{4, 8});
  CHECK(cat().weighing_orders_up_to(2, 7) == std::vector<int>{2, 4, 6});
  CHECK(cat().weighing_orders_up_to(5, 15) == std::vector<int>{6, 8, 10, 12, 14});
  CHECK(cat().weighing_orders_up_to(6, 11) == std::vector<int>{8});
}
