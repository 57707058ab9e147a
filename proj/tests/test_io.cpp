#include <doctest.h>

#include <sstream>

#include "zt/harness.hpp"
#include "zt/tensor_io.hpp"

using namespace zt;

TEST_CASE("json write/read round-trips") {
  Tensor T = paper_example(2);
  std::stringstream buf;
  write_tensor(buf, T);
  Tensor back = read_tensor(buf);
  CHECK(back == T);
}

TEST_CASE("writer emits entries sorted by tuple") {
  Tensor T = make_tensor(2, 3, {{{3, 1}, 1.0}, {{1, 2}, 2.0}, {{1, 1}, 3.0}});
  std::stringstream buf;
  write_tensor(buf, T);
  std::string text = buf.str();
  // entries must appear as (1,1)=3, (1,2)=2, (3,1)=1
  auto a = text.find("3.0");
  auto b = text.find("2.0");
  auto c = text.find("1.0");
  CHECK(a < b);
  CHECK(b < c);
}

TEST_CASE("plain text with header") {
  std::stringstream in(
      "# order dim\n"
      "5 3\n"
      "1 1 1 1 1  1\n"
      "2 2 2 2 2  1\n"
      "3 3 3 3 3  3\n"
      "1 1 3 3 3 -1\n"
      "2 2 3 3 3 -2\n");
  Tensor T = read_tensor(in);
  CHECK(T == paper_example(2));
}

TEST_CASE("plain text without header infers shape") {
  std::stringstream in(
      "1 1 2 -1.5\n"
      "2 2 2  0.5  # trailing comment\n");
  Tensor T = read_tensor(in);
  CHECK(T.order() == 3);
  CHECK(T.dim() == 2);
  CHECK(T.at({1, 1, 2}) == -1.5);
}

TEST_CASE("parse errors carry the right code") {
  auto expect_parse_error = [](const std::string& text) {
    std::stringstream in(text);
    try {
      read_tensor(in);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  };
  expect_parse_error("");
  expect_parse_error("{\"order\": 3}");
  expect_parse_error("{bad json");
  expect_parse_error("1 2\n1 1 bad\n");
  expect_parse_error("2 2\n1 1 1 1 5\n");   // entry longer than declared order
  expect_parse_error("1 1 1 1\n1 1 1\n");   // inconsistent entry lengths
  CHECK_THROWS_AS(read_tensor_file("/nonexistent/path.tensor"), Error);
}
