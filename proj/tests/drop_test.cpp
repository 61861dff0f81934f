/*
 * Copyright (c) 2026, the dropreef authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include <doctest.h>

#include "dropreef/drop.hpp"
#include "dropreef/rng.hpp"
#include "oracles.hpp"

using namespace dropreef;

namespace {

SplitMask all_train(NodeId n) {
  SplitMask mask;
  mask.roles.assign(n, Role::kTrain);
  return mask;
}

NodeMetrics metrics_for(const CsrGraph& g, const LabelMatrix& labels,
                        const EdgeProbabilities& probs, const SplitMask& mask) {
  return wnh_all(g, labels, probs, mask.nodes_with(Role::kTrain));
}

// Star K_{1,4}: center 0 class 0, leaves class 1, everything training.
struct StarCase {
  CsrGraph graph;
  LabelMatrix labels{0, 0};
  EdgeProbabilities probs;
  SplitMask mask;
};

StarCase star_case() {
  StarCase c;
  c.graph = build_csr({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, 5);
  c.labels = LabelMatrix(5, 2);
  c.labels.set(0, 0);
  for (NodeId v = 1; v < 5; ++v) c.labels.set(v, 1);
  c.probs = uniform_probs(c.graph);
  c.mask = all_train(5);
  return c;
}

}  // namespace

TEST_CASE("DropConfig rejects invalid thresholds") {
  CHECK_THROWS_AS((DropConfig{-0.5, 1}.validate()), InputError);
  CHECK_THROWS_AS(
      (DropConfig{std::numeric_limits<double>::quiet_NaN(), 1}.validate()),
      InputError);
  CHECK_THROWS_AS((DropConfig{0.0, 0}.validate()), InputError);
  CHECK_NOTHROW((DropConfig{0.0, 1}.validate()));
}

TEST_CASE("detect_redundant with an unreachable threshold finds nothing") {
  auto c = star_case();
  auto metrics = metrics_for(c.graph, c.labels, c.probs, c.mask);
  auto redundant = detect_redundant(metrics, c.graph, c.mask,
                                    DropConfig{std::sqrt(2.0) + 0.1, 1});
  CHECK(redundant.empty());
}

TEST_CASE("detect_redundant with zero thresholds keeps isolated nodes out") {
  auto g = build_csr({{0, 1}}, 3);
  LabelMatrix labels(3, 2);
  for (NodeId v = 0; v < 3; ++v) labels.set(v, 0);
  auto mask = all_train(3);
  auto metrics = metrics_for(g, labels, uniform_probs(g), mask);
  auto redundant = detect_redundant(metrics, g, mask, DropConfig{0.0, 1});
  CHECK(redundant == std::vector<NodeId>{0, 1});
}

TEST_CASE("detect_redundant finds nothing on a homophilic graph") {
  auto g = build_csr({{0, 1}, {1, 2}, {2, 0}}, 3);
  LabelMatrix labels(3, 3);
  for (NodeId v = 0; v < 3; ++v) labels.set(v, 2);
  auto mask = all_train(3);
  auto metrics = metrics_for(g, labels, uniform_probs(g), mask);
  CHECK(detect_redundant(metrics, g, mask, DropConfig{0.1, 1}).empty());
}

TEST_CASE("detect_redundant thresholds are inclusive") {
  auto c = star_case();
  auto metrics = metrics_for(c.graph, c.labels, c.probs, c.mask);
  const double center_wnh = metrics.wnh[0];
  auto redundant = detect_redundant(metrics, c.graph, c.mask,
                                    DropConfig{center_wnh, 4});
  CHECK(redundant == std::vector<NodeId>{0});
  // A hair above either threshold excludes the center again.
  CHECK(detect_redundant(
            metrics, c.graph, c.mask,
            DropConfig{std::nextafter(center_wnh,
                                      std::numeric_limits<double>::infinity()),
                       4})
            .empty());
  CHECK(detect_redundant(metrics, c.graph, c.mask, DropConfig{center_wnh, 5})
            .empty());
}

TEST_CASE("detect_redundant matches the brute filter") {
  Rng rng(2020);
  for (int iter = 0; iter < 60; ++iter) {
    auto in = oracle::random_instance(rng, {.max_nodes = 40});
    auto g = oracle::to_graph(in);
    auto labels = oracle::to_labels(in);
    auto probs = oracle::to_probs(in, g);
    auto mask = oracle::to_mask(in);
    auto metrics = metrics_for(g, labels, probs, mask);
    for (double th_wnh : {0.0, 0.3, 0.8, 1.2}) {
      for (NodeId th_deg : {NodeId(1), NodeId(2), NodeId(4)}) {
        auto got =
            detect_redundant(metrics, g, mask, DropConfig{th_wnh, th_deg});
        CHECK(got == oracle::detect_redundant(in, th_wnh, th_deg));
      }
    }
  }
}

TEST_CASE("detect_redundant demands metrics for every training node") {
  auto c = star_case();
  std::vector<NodeId> partial{0, 1};
  auto metrics = wnh_all(c.graph, c.labels, c.probs, partial);
  CHECK_THROWS_WITH_AS(
      (void)detect_redundant(metrics, c.graph, c.mask, DropConfig{0.0, 1}),
      doctest::Contains("metrics missing for training node"), InternalError);
}

TEST_CASE("drop with an empty redundant set changes nothing") {
  auto c = star_case();
  auto out = drop(c.graph, {}, c.mask, DropConfig{1.0, 2});
  CHECK(out.graph.offsets == c.graph.offsets);
  CHECK(out.graph.targets == c.graph.targets);
  CHECK(out.mask.roles == c.mask.roles);
  CHECK(out.report.dropped.empty());
  CHECK(out.report.drop_node_ratio == 0.0);
  CHECK(out.report.removed_edge_count == 0);
  for (NodeId v = 0; v < 5; ++v) CHECK(out.map.new_of_old[v] == v);
}

TEST_CASE("dropping the star center gives exact ratios") {
  auto c = star_case();
  auto metrics = metrics_for(c.graph, c.labels, c.probs, c.mask);
  DropConfig config{1.0, 2};
  auto redundant = detect_redundant(metrics, c.graph, c.mask, config);
  REQUIRE(redundant == std::vector<NodeId>{0});
  auto out = drop(c.graph, redundant, c.mask, config);
  CHECK(out.report.train_count == 5);
  CHECK(out.report.drop_node_ratio == 0.2);
  CHECK(out.report.drop_edge_ratio == 1.0);
  CHECK(out.report.removed_edge_count == 4);
  CHECK(out.report.train_incident_edge_count == 4);
  CHECK(out.graph.num_nodes == 4);
  CHECK(out.graph.num_undirected_edges() == 0);
  CHECK(out.map.new_of_old[0] == kInvalidNode);
  CHECK(out.mask.count(Role::kTrain) == 4);
}

TEST_CASE("drop refuses non-training nodes") {
  auto c = star_case();
  c.mask.roles[2] = Role::kVal;
  std::vector<NodeId> redundant{2};
  CHECK_THROWS_WITH_AS((void)drop(c.graph, redundant, c.mask, DropConfig{0, 1}),
                       doctest::Contains("not a training node"), InputError);
}

TEST_CASE("drop deduplicates the redundant list") {
  auto c = star_case();
  std::vector<NodeId> twice{0, 0};
  auto out = drop(c.graph, twice, c.mask, DropConfig{0, 1});
  CHECK(out.report.dropped == std::vector<NodeId>{0});
  CHECK(out.report.drop_node_ratio == 0.2);
  CHECK(out.report.removed_edge_count == 4);
}

TEST_CASE("drop conserves edges and preserves graph invariants") {
  Rng rng(2121);
  for (int iter = 0; iter < 40; ++iter) {
    auto in = oracle::random_instance(rng, {.max_nodes = 40});
    auto g = oracle::to_graph(in);
    auto labels = oracle::to_labels(in);
    auto probs = oracle::to_probs(in, g);
    auto mask = oracle::to_mask(in);
    auto metrics = metrics_for(g, labels, probs, mask);
    DropConfig config{0.4, 2};
    auto redundant = detect_redundant(metrics, g, mask, config);
    auto out = drop(g, redundant, mask, config);

    out.graph.validate();
    CHECK(out.graph.num_undirected_edges() + out.report.removed_edge_count ==
          g.num_undirected_edges());
    CHECK(out.graph.num_nodes + out.report.dropped.size() == g.num_nodes);
    // Degrees of survivors never grow, and only dropped ids disappear.
    for (NodeId v = 0; v < g.num_nodes; ++v) {
      const bool dropped = std::binary_search(out.report.dropped.begin(),
                                              out.report.dropped.end(), v);
      if (dropped) {
        CHECK(out.map.new_of_old[v] == kInvalidNode);
      } else {
        const NodeId nv = out.map.new_of_old[v];
        REQUIRE(nv != kInvalidNode);
        CHECK(out.graph.degree(nv) <= g.degree(v));
        CHECK(out.mask.roles[nv] == mask.roles[v]);
      }
    }
    // A surviving edge must have existed before.
    for (NodeId nv = 0; nv < out.graph.num_nodes; ++nv) {
      for (NodeId nu : out.graph.neighbors(nv)) {
        CHECK(g.has_edge(out.map.old_of_new[nv], out.map.old_of_new[nu]));
      }
    }
  }
}

TEST_CASE("raising either threshold shrinks the redundant set") {
  Rng rng(2222);
  for (int iter = 0; iter < 20; ++iter) {
    auto in = oracle::random_instance(rng, {.max_nodes = 40});
    auto g = oracle::to_graph(in);
    auto labels = oracle::to_labels(in);
    auto probs = oracle::to_probs(in, g);
    auto mask = oracle::to_mask(in);
    auto metrics = metrics_for(g, labels, probs, mask);
    auto low = detect_redundant(metrics, g, mask, DropConfig{0.2, 1});
    auto high_wnh = detect_redundant(metrics, g, mask, DropConfig{0.6, 1});
    auto high_deg = detect_redundant(metrics, g, mask, DropConfig{0.2, 3});
    CHECK(std::includes(low.begin(), low.end(), high_wnh.begin(),
                        high_wnh.end()));
    CHECK(std::includes(low.begin(), low.end(), high_deg.begin(),
                        high_deg.end()));
  }
}

TEST_CASE("run_dropreef on a homophilic graph is the identity") {
  auto g = build_csr({{0, 1}, {1, 2}, {2, 3}}, 4);
  LabelMatrix labels(4, 2);
  for (NodeId v = 0; v < 4; ++v) labels.set(v, 0);
  auto probs = uniform_probs(g);
  auto mask = all_train(4);
  auto out = run_dropreef(g, labels, probs, mask, DropConfig{0.1, 1});
  CHECK(out.report.dropped.empty());
  CHECK(out.graph.offsets == g.offsets);
  CHECK(out.graph.targets == g.targets);
  CHECK(out.labels == labels);
  CHECK(out.probs.values == probs.values);
  CHECK(out.mask.roles == mask.roles);
}

TEST_CASE("run_dropreef drops exactly the heterophilic hub") {
  // Star K_{1,6}: the center differs from every leaf. Leaves stay below
  // the degree threshold.
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 1; v <= 6; ++v) edges.emplace_back(0, v);
  auto g = build_csr(edges, 7);
  LabelMatrix labels(7, 2);
  labels.set(0, 0);
  for (NodeId v = 1; v <= 6; ++v) labels.set(v, 1);
  auto mask = all_train(7);
  auto out =
      run_dropreef(g, labels, uniform_probs(g), mask, DropConfig{1.0, 3});
  CHECK(out.report.dropped == std::vector<NodeId>{0});
  CHECK(out.report.drop_node_ratio == doctest::Approx(1.0 / 7).epsilon(1e-15));
  CHECK(out.report.drop_edge_ratio == 1.0);
  CHECK(out.graph.num_nodes == 6);
  CHECK(out.graph.num_undirected_edges() == 0);
  CHECK(out.labels.num_nodes() == 6);
  for (NodeId v = 0; v < 6; ++v) {
    CHECK(out.labels.classes_of(v) == std::vector<std::uint32_t>{1});
  }
}

TEST_CASE("run_dropreef equals detect plus drop plus remap") {
  Rng rng(2323);
  for (int iter = 0; iter < 20; ++iter) {
    auto in = oracle::random_instance(rng, {.max_nodes = 40});
    auto g = oracle::to_graph(in);
    auto labels = oracle::to_labels(in);
    auto probs = oracle::to_probs(in, g);
    auto mask = oracle::to_mask(in);
    DropConfig config{0.5, 2};

    auto pipeline = run_dropreef(g, labels, probs, mask, config);

    auto metrics = metrics_for(g, labels, probs, mask);
    auto redundant = detect_redundant(metrics, g, mask, config);
    auto manual = drop(g, redundant, mask, config);
    CHECK(pipeline.report.dropped == manual.report.dropped);
    CHECK(pipeline.graph.offsets == manual.graph.offsets);
    CHECK(pipeline.graph.targets == manual.graph.targets);
    CHECK(pipeline.mask.roles == manual.mask.roles);
    CHECK(pipeline.labels == labels.remap(manual.map));
    CHECK(pipeline.probs.values ==
          probs.remap(g, manual.graph, manual.map).values);
  }
}

TEST_CASE("run_dropreef writes the WNH snapshot when asked") {
  auto c = star_case();
  const auto path = std::filesystem::temp_directory_path() /
                    "dropreef_snapshot_test.tsv";
  std::filesystem::remove(path);
  auto out = run_dropreef(c.graph, c.labels, c.probs, c.mask,
                          DropConfig{1.0, 2}, 1, path.string());
  CHECK(out.report.wnh_snapshot_path == path.string());
  REQUIRE(std::filesystem::exists(path));
  std::ifstream stream(path);
  std::string header;
  std::getline(stream, header);
  CHECK(header == "# node_id\tdegree\twnh");
  std::string first;
  std::getline(stream, first);
  CHECK(first.rfind("0\t4\t", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("retain_inference_edges keeps topology and blanks labels") {
  auto c = star_case();
  DropConfig config{1.0, 2, true};
  auto out = run_dropreef(c.graph, c.labels, c.probs, c.mask, config);
  CHECK(out.report.dropped == std::vector<NodeId>{0});
  CHECK(out.graph.num_nodes == 5);
  CHECK(out.graph.targets == c.graph.targets);
  CHECK(out.probs.values == c.probs.values);
  CHECK(out.mask.roles[0] == Role::kDropped);
  for (NodeId v = 1; v < 5; ++v) CHECK(out.mask.roles[v] == Role::kTrain);
  CHECK(out.labels.row_count(0) == 0);
  CHECK(out.labels.row_count(1) == 1);
  for (NodeId v = 0; v < 5; ++v) CHECK(out.map.new_of_old[v] == v);
}

TEST_CASE("run_dropreef rejects mismatched node counts") {
  auto g = build_csr({{0, 1}}, 2);
  LabelMatrix labels(3, 2);
  auto mask = all_train(2);
  CHECK_THROWS_AS((void)run_dropreef(g, labels, uniform_probs(g), mask,
                                     DropConfig{0.0, 1}),
                  InputError);
}

TEST_CASE("uniform probabilities and an all-ones file agree bit for bit") {
  Rng rng(2424);
  auto in = oracle::random_instance(rng, {.max_nodes = 40});
  auto g = oracle::to_graph(in);
  auto labels = oracle::to_labels(in);
  auto mask = oracle::to_mask(in);
  auto uniform = uniform_probs(g);
  EdgeProbabilities explicit_ones;
  explicit_ones.values.assign(g.targets.size(), 1.0);
  auto a = run_dropreef(g, labels, uniform, mask, DropConfig{0.5, 2});
  auto b = run_dropreef(g, labels, explicit_ones, mask, DropConfig{0.5, 2});
  CHECK(a.report.dropped == b.report.dropped);
  CHECK(a.graph.targets == b.graph.targets);
  for (NodeId v : a.metrics.nodes) CHECK(a.metrics.wnh[v] == b.metrics.wnh[v]);
}

TEST_CASE("threshold_from_quantile nearest-rank examples") {
  std::vector<double> values{5.0, 1.0, 3.0, 2.0, 4.0};
  CHECK(threshold_from_quantile(values, 0.0) == 1.0);
  CHECK(threshold_from_quantile(values, 1.0) == 5.0);
  CHECK(threshold_from_quantile(values, 0.5) == 3.0);
  CHECK(threshold_from_quantile(values, 0.25) == 2.0);
  std::vector<double> one{7.5};
  CHECK(threshold_from_quantile(one, 0.0) == 7.5);
  CHECK(threshold_from_quantile(one, 1.0) == 7.5);
}

TEST_CASE("threshold_from_quantile validates its inputs") {
  std::vector<double> empty;
  CHECK_THROWS_AS((void)threshold_from_quantile(empty, 0.5), InputError);
  std::vector<double> values{1.0, 2.0};
  CHECK_THROWS_AS((void)threshold_from_quantile(values, -0.1), InputError);
  CHECK_THROWS_AS((void)threshold_from_quantile(values, 1.1), InputError);
}
