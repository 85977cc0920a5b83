#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "eigenpts/configuration.hpp"
#include "eigenpts/eigensolver.hpp"
#include "eigenpts/lattice.hpp"
#include "eigenpts/reconstruction.hpp"
#include "eigenpts/tensor.hpp"

namespace eigenpts::io {

using json = nlohmann::ordered_json;

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// Tensor file contents; `form` is set for symmetric tensors.
struct TensorFile {
  PartialSymTensor tensor;
  std::optional<Polynomial> form;
};

json to_json(const PartialSymTensor& t);
json to_json(const SymmetricTensor& t);
TensorFile tensor_from_json(const json& j);

// Exact points as rational strings, floating points as [re, im] pairs.
json point_to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const json& j);

json to_json(const EigenSolution& s, bool real_only = false);

struct PointsFile {
  int n = 0;
  std::vector<ProjectivePoint> points;
  std::vector<int> multiplicities;
};
PointsFile points_from_json(const json& j);

json to_json(const KernelReport& k);
json to_json(const IncidenceReport& r);
json to_json(const CollinearReport& r);
json to_json(const DecisionReport& r);
json to_json(const SurfaceLattice& lat);

// Parses JSON text; throws std::invalid_argument with the parser message.
json parse(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace eigenpts::io
