#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "tightpath/tightpath.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  tp_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("create, inspect and free a hypergraph") {
  const int32_t verts[] = {0, 2, 1, 2, 0, 2};
  tp_hypergraph* h = nullptr;
  REQUIRE(tp_hypergraph_create(4, 2, 1, verts, 3, &h) == TP_OK);
  CHECK(tp_hypergraph_n(h) == 4);
  CHECK(tp_hypergraph_r(h) == 2);
  CHECK(tp_hypergraph_geometric(h) == 1);
  CHECK(tp_hypergraph_edge_count(h) == 2);
  int32_t e[2];
  REQUIRE(tp_hypergraph_edge(h, 1, e) == TP_OK);
  CHECK(e[0] == 1);
  CHECK(e[1] == 2);
  CHECK(tp_hypergraph_edge(h, 2, e) == TP_ERR_DOMAIN);

  char* text = nullptr;
  REQUIRE(tp_hypergraph_to_text(h, &text) == TP_OK);
  CHECK(take(text) == "4 2 cgh\n0 2\n1 2\n");

  tp_hypergraph* sh = nullptr;
  REQUIRE(tp_hypergraph_shadow(h, &sh) == TP_OK);
  CHECK(tp_hypergraph_edge_count(sh) == 3);
  tp_hypergraph_free(sh);

  tp_hypergraph* lk = nullptr;
  REQUIRE(tp_hypergraph_link(h, 2, &lk) == TP_OK);
  CHECK(tp_hypergraph_edge_count(lk) == 2);
  tp_hypergraph_free(lk);
  tp_hypergraph_free(h);
}

TEST_CASE("errors map to status codes with messages") {
  tp_hypergraph* h = nullptr;
  CHECK(tp_hypergraph_parse("4 2 cgh\n0 9\n", &h) == TP_ERR_PARSE);
  CHECK(h == nullptr);
  CHECK(std::string(tp_last_error()) == "line 2, column 3: vertex 9 outside 0..3");
  CHECK(tp_hypergraph_read_file("/nonexistent/file.cgh", &h) == TP_ERR_IO);
  CHECK(tp_hypergraph_parse(nullptr, &h) == TP_ERR_NULL_ARGUMENT);
  CHECK(tp_construct(TP_FAMILY_STACK_FREE, 8, 3, 2, &h) == TP_ERR_UNSUPPORTED);
  CHECK(tp_construct(TP_FAMILY_TRANSVERSAL, 11, 4, 5, &h) == TP_ERR_DOMAIN);
  CHECK(std::string(tp_status_name(TP_ERR_STUCK_END)) == "stuck_end");
  tp_pattern p;
  CHECK(tp_pattern_from_name("stack", &p) == TP_OK);
  CHECK(p == TP_STACK);
  CHECK(tp_pattern_from_name("nope", &p) == TP_ERR_DOMAIN);
}

TEST_CASE("constructions and detection through the C API") {
  tp_hypergraph* h = nullptr;
  REQUIRE(tp_construct(TP_FAMILY_SHORT_SIDE, 8, 4, 3, &h) == TP_OK);
  tp_witness* w = reinterpret_cast<tp_witness*>(1);
  REQUIRE(tp_find_pattern(h, TP_STACK, 3, &w) == TP_OK);
  CHECK(w == nullptr);
  tp_hypergraph_free(h);

  REQUIRE(tp_construct(TP_FAMILY_CLIQUE_UNION, 6, 2, 3, &h) == TP_OK);
  REQUIRE(tp_find_pattern(h, TP_ZIGZAG, 2, &w) == TP_OK);
  REQUIRE(w != nullptr);
  CHECK(tp_witness_k(w) == 2);
  CHECK(tp_witness_length(w) == 3);
  int z = 0;
  REQUIRE(tp_is_zigzag(6, tp_witness_sequence(w), tp_witness_length(w), 2, &z) == TP_OK);
  CHECK(z == 1);
  char* js = nullptr;
  REQUIRE(tp_witness_to_json(w, &js) == TP_OK);
  CHECK(nlohmann::json::parse(take(js))["kind"] == "zigzag");
  tp_witness_free(w);

  tp_hypergraph* lifted = nullptr;
  REQUIRE(tp_lift_plus(h, 2, &lifted) == TP_OK);
  CHECK(tp_hypergraph_edge_count(lifted) == 12);
  CHECK(tp_hypergraph_r(lifted) == 3);
  tp_hypergraph_free(lifted);
  tp_hypergraph_free(h);
}

TEST_CASE("file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "tightpath_capi.cgh").string();
  tp_hypergraph* h = nullptr;
  REQUIRE(tp_construct(TP_FAMILY_SHORT_SIDE, 8, 4, 3, &h) == TP_OK);
  REQUIRE(tp_hypergraph_write_file(h, path.c_str()) == TP_OK);
  tp_hypergraph* back = nullptr;
  REQUIRE(tp_hypergraph_read_file(path.c_str(), &back) == TP_OK);
  char* a = nullptr;
  char* b = nullptr;
  tp_hypergraph_to_text(h, &a);
  tp_hypergraph_to_text(back, &b);
  CHECK(take(a) == take(b));
  tp_hypergraph_free(h);
  tp_hypergraph_free(back);
  std::filesystem::remove(path);
}

TEST_CASE("reports as json") {
  char* js = nullptr;
  REQUIRE(tp_bound_table(6, 3, 4, &js) == TP_OK);
  CHECK(nlohmann::json::parse(take(js))["bounds"].size() == 8);
  double v = 0;
  REQUIRE(tp_evaluate_bound("tight_path", 6, 3, 4, &v) == TP_OK);
  CHECK(v == doctest::Approx(37.5));
  CHECK(tp_evaluate_bound("perles", 6, 3, 4, &v) == TP_ERR_DOMAIN);

  tp_search_options opts{0, 1};
  int value = -1, exhaustive = 0;
  tp_hypergraph* wit = nullptr;
  REQUIRE(tp_search(6, 2, 3, TP_ZIGZAG, 1, &opts, &value, &exhaustive, &wit, &js) == TP_OK);
  CHECK(value == 6);
  CHECK(exhaustive == 1);
  CHECK(tp_hypergraph_edge_count(wit) == 6);
  CHECK(nlohmann::json::parse(take(js))["group"] == "cyclic");
  tp_hypergraph_free(wit);

  tp_hypergraph* h = nullptr;
  REQUIRE(tp_construct(TP_FAMILY_CLIQUE_UNION, 6, 2, 3, &h) == TP_OK);
  int free = 0;
  REQUIRE(tp_verify_family(h, TP_ZIGZAG, 3, &free, nullptr) == TP_OK);
  CHECK(free == 1);
  int violations = -1;
  REQUIRE(tp_verify_counting(h, 3, 0, nullptr, 0, &violations, &js) == TP_OK);
  CHECK(violations == 0);
  CHECK(nlohmann::json::parse(take(js))["rows"].size() == 3);
  const int32_t one_block[6] = {0, 0, 0, 0, 0, 0};
  REQUIRE(tp_verify_counting(h, 2, 1, one_block, 1, &violations, nullptr) == TP_OK);
  CHECK(violations == 0);
  REQUIRE(tp_experiment(h, 0, 10, &js) == TP_OK);
  CHECK(nlohmann::json::parse(take(js))["mean_G"] == 6.0);
  CHECK(tp_experiment(h, 0, 0, &js) == TP_ERR_DOMAIN);
  tp_hypergraph_free(h);
}
