#include <sstream>

#include "doctest.h"
#include "plcube/cli.h"
#include "plcube/constructors.h"
#include "plcube/errors.h"

using namespace plcube;

namespace {

CommandResult run_with(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return run(args, in);
}

}  // namespace

TEST_CASE("construct piped into check") {
  const auto tw = run_with({"construct", "twist"});
  REQUIRE(tw.status == 0);
  const auto c = run_with({"check", "-"}, tw.payload.dump());
  CHECK(c.status == 0);
  CHECK(c.payload["valid"] == true);
  CHECK(c.payload["preserves_area"] == true);
}

TEST_CASE("check reports invalid maps with status 1") {
  // a singular linear piece: the map is not injective
  const json bad = json::parse(R"({"dim": 2, "kind": "generic", "cells": [
    {"simplex": [["-1","-1"], ["1","-1"], ["1","1"]], "linear": [["1","0"], ["0","0"]], "translation": ["0","0"]},
    {"simplex": [["-1","-1"], ["1","1"], ["-1","1"]], "linear": [["1","0"], ["0","1"]], "translation": ["0","0"]}]})");
  const auto c = run_with({"check", "-"}, bad.dump());
  CHECK(c.status == 1);
  CHECK(c.payload["valid"] == false);
  CHECK_THROWS_AS(parse_map(bad.dump()), InvalidMapError);
}

TEST_CASE("serialization round trip keeps exact rationals") {
  const PLMap f = pl1d({{Rational(-1), Rational(-1)}, {Rational(1, 3), Rational(-1, 3)}, {Rational(1), Rational(1)}});
  const std::string text = serialize(f);
  CHECK(text.find("\"1/3\"") != std::string::npos);
  CHECK(equals(parse_map(text), f));
  CHECK(serialize(parse_map(text)) == text);
  CHECK(equals(parse_map(serialize(PLMap::identity(2))), PLMap::identity(2)));
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_map("{\"dim\": 1, \"cells\": [ {\"simplex\": [[\"-1\"]] } ]}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/cells/0") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_map("{\"dim\": 1,"), ParseError);
  const auto r = run_with({"check", "-"}, "not json");
  CHECK(r.status == 2);
}

TEST_CASE("commands and exit codes") {
  CHECK(run_with({"bogus"}).status == 2);
  CHECK(run_with({}).status == 2);
  CHECK(run_with({"construct", "twist", "--inner", "zero"}).status == 2);

  const auto id = run_with({"construct", "identity", "--dim", "1"});
  const auto s = run_with({"order", "sign", "--map", "-"}, id.payload.dump());
  CHECK(s.status == 0);
  CHECK(s.payload["sign"] == 0);

  const auto a = run_with({"apply", "--map", "-", "--point", "3/4,0"}, run_with({"construct", "twist"}).payload.dump());
  CHECK(a.status == 0);
  CHECK(a.payload["image"] == json({"3/4", "1/6"}));

  const auto cy = run_with({"order", "cocycle-test", "--samples", "200", "--seed", "5"});
  CHECK(cy.status == 0);
  CHECK(cy.payload["failures"] == 0);

  CHECK(run_with({"verify", "klein-relation"}).status == 0);
  CHECK(run_with({"verify", "no-such-suite"}).status == 2);
}
