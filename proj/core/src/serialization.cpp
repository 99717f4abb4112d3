#include "sobolev/serialization.hpp"

namespace sobolev {

namespace {

nlohmann::json pair(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

cplx read_pair(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("json: expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

} // namespace

nlohmann::json to_json(const JordanOperator& z) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : z.blocks()) {
    nlohmann::json alphas = nlohmann::json::array();
    for (const cplx& a : b.superdiag) alphas.push_back(pair(a));
    blocks.push_back({{"z", pair(b.eigenvalue)}, {"alphas", std::move(alphas)}});
  }
  return {{"blocks", std::move(blocks)}};
}

nlohmann::json to_json(const WeightVector& w) {
  nlohmann::json betas = nlohmann::json::array();
  for (const cplx& b : w.betas()) betas.push_back(pair(b));
  return {{"betas", std::move(betas)}};
}

nlohmann::json to_json(const SpectralData& data) {
  nlohmann::json j = to_json(data.z);
  j["betas"] = to_json(data.w)["betas"];
  return j;
}

nlohmann::json to_json(const SobolevProductSpec& spec) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : spec.terms) terms.push_back({{"z", pair(t.node)}, {"weights", t.weights}});
  return {{"terms", std::move(terms)}};
}

SpectralData spectral_from_json(const nlohmann::json& j) {
  std::vector<JordanBlock> blocks;
  for (const auto& jb : field(j, "blocks")) {
    JordanBlock b{read_pair(field(jb, "z")), {}};
    for (const auto& a : field(jb, "alphas")) b.superdiag.push_back(read_pair(a));
    blocks.push_back(std::move(b));
  }
  std::vector<cplx> betas;
  for (const auto& b : field(j, "betas")) betas.push_back(read_pair(b));
  SpectralData data{JordanOperator(std::move(blocks)), WeightVector(std::move(betas))};
  data.validate();
  return data;
}

SobolevProductSpec spec_from_json(const nlohmann::json& j) {
  SobolevProductSpec spec;
  for (const auto& jt : field(j, "terms")) {
    SobolevProductSpec::Term t{read_pair(field(jt, "z")), {}};
    for (const auto& w : field(jt, "weights")) {
      if (!w.is_number()) throw std::invalid_argument("json: weights must be numbers");
      t.weights.push_back(w.get<double>());
    }
    spec.terms.push_back(std::move(t));
  }
  spec.validate();
  return spec;
}

} // namespace sobolev
