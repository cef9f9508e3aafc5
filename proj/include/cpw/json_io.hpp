#pragma once

#include <string>

#include "cpw/bounds.hpp"
#include "cpw/decomposition.hpp"
#include "cpw/oracles.hpp"
#include "cpw/pipeline.hpp"

namespace cpw {

// Stable JSON schemas used by every CLI subcommand. Keys are emitted in
// sorted order; identical inputs produce byte-identical text.

std::string decomposition_to_json(const PathDecomposition& d);
PathDecomposition decomposition_from_json(const std::string& text);

std::string thm1_to_json(const Thm1Certificate& cert);

std::string lemma2_to_json(const PathDecomposition& d, int m, int n, long long bound);

std::string minor_model_to_json(const MinorModel& model);
MinorModel minor_model_from_json(const std::string& text);

std::string cycle_packing_to_json(const CyclePacking& packing);
CyclePacking cycle_packing_from_json(const std::string& text);

std::string pipeline_outcome_to_json(const PipelineOutcome& outcome);

std::string hitting_set_to_json(const HittingSet& hs);

std::string forest_to_json(const RootedForest& f);

std::string params_to_json(const PipelineParams& params, long long budget);

std::string pathwidth_result_to_json(const PathwidthResult& r);
std::string treedepth_result_to_json(const TreedepthResult& r);
std::string cycle_result_to_json(const CycleResult& r);
std::string path_result_to_json(const PathResult& r);
std::string transversal_result_to_json(const TransversalResult& r);

}  // namespace cpw
