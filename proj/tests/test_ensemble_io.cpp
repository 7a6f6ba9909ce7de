/**
 * Copyright 2026, the holevo authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include "holevo/ensemble_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "holevo/random.hpp"

using namespace holevo;

TEST(ParseEnsemble, MatrixForm) {
  const Ensemble e = parse_ensemble(R"({"dim": 2, "states": [
    {"p": 0.25, "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]},
    {"p": 0.75, "matrix": [[[0.5, 0], [0, -0.5]], [[0, 0.5], [0.5, 0]]]}]})");
  EXPECT_EQ(e.size(), 2);
  EXPECT_EQ(e.dim(), 2);
  EXPECT_DOUBLE_EQ(e.weights()[1], 0.75);
  EXPECT_DOUBLE_EQ(e.states()[1].matrix()(0, 1).imag(), -0.5);
  EXPECT_DOUBLE_EQ(e.states()[1].matrix()(1, 0).imag(), 0.5);
}

TEST(ParseEnsemble, BlochForm) {
  const Ensemble e = parse_ensemble(R"({"dim": 2, "states": [
    {"p": 0.5, "bloch": [0, 0, 1]}, {"p": 0.5, "bloch": [0, 0, -1]}]})");
  EXPECT_NEAR(dbhq(e, Notion::RelativeEntropy), 1.0, 1e-12);
}

TEST(ParseEnsemble, SyntaxErrorCarriesPosition) {
  try {
    parse_ensemble("{\"dim\": 2,\n  \"states\": [}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line(), 2u);
    EXPECT_GT(err.column(), 0u);
  }
}

TEST(ParseEnsemble, SchemaErrors) {
  EXPECT_THROW(parse_ensemble("[]"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"states": []})"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": []})"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 0, "states": [{"p": 1, "bloch": [0, 0, 1]}]})"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": [{"bloch": [0, 0, 1]}]})"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": [{"p": "x", "bloch": [0, 0, 1]}]})"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": [{"p": 1, "bloch": [0, 1]}]})"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 3, "states": [{"p": 1, "bloch": [0, 0, 1]}]})"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": [{"p": 1}]})"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": [{"p": 1, "matrix": [[[1, 0]]]}]})"), ParseError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": [
    {"p": 0.5, "bloch": [0, 0, 1]},
    {"p": 0.5, "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]}]})"),
               ParseError);
}

TEST(ParseEnsemble, PhysicalErrors) {
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": [{"p": 0.7, "bloch": [0, 0, 1]}]})"), InvariantError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": [{"p": 1, "bloch": [0, 1, 1]}]})"), InvariantError);
  EXPECT_THROW(parse_ensemble(R"({"dim": 2, "states": [
    {"p": 1, "matrix": [[[1, 0], [0, 1]], [[0, 0], [0, 0]]]}]})"),
               InvariantError);
}

TEST(EnsembleToJson, RoundTripIsExact) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const int dim = rng.uniform_int(2, 4);
    std::vector<DensityMatrixd> states;
    for (int i = 0; i < 3; ++i) states.push_back(random_density(dim, rng));
    const Ensemble e(ProbVector(dirichlet_uniform(3, rng)), std::move(states));
    const std::string text = ensemble_to_json(e);
    const Ensemble back = parse_ensemble(text);
    EXPECT_EQ(ensemble_to_json(back), text);
    for (int i = 0; i < 3; ++i) {
      EXPECT_LE((back.states()[i].matrix() - e.states()[i].matrix()).norm(), 1e-15);
    }
  }
}

TEST(ReadEnsembleFile, MissingFile) {
  EXPECT_THROW(read_ensemble_file("/nonexistent/ensemble.json"), ParseError);
}

TEST(ReadEnsembleFile, ReadsFromDisk) {
  const std::string path = ::testing::TempDir() + "holevo_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"dim": 2, "states": [{"p": 1.0, "bloch": [0.6, 0, 0]}]})";
  }
  const Ensemble e = read_ensemble_file(path);
  EXPECT_NEAR(e.states()[0].matrix()(0, 1).real(), 0.3, 1e-15);
  std::remove(path.c_str());
}
