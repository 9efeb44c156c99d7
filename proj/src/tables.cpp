#include "f4x/tables.hpp"

#include <cstdio>
#include <stdexcept>

#include "f4x/orbit_data.hpp"
#include "json.hpp"

namespace f4x {

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> OrbitRecord::support_labels() const {
  std::vector<std::string> out;
  for (int r : support) out.push_back(root_label(RootSystem::get().root(r).coeffs));
  return out;
}

OrbitTable OrbitTable::from_json(const std::string& text) {
  OrbitTable t;
  t.source_ = text;
  t.checksum_ = fnv1a64_hex(text);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    for (const auto& j : doc.at("reductive_types")) {
      t.types_.push_back({j.at("type").get<std::string>(), j.at("dim").get<int>(),
                          QPolynomial::parse(j.at("order").get<std::string>())});
    }
    const auto& rs = RootSystem::get();
    int index = 0;
    for (const auto& j : doc.at("orbits")) {
      OrbitRecord r;
      r.index = ++index;
      r.id = j.at("id").get<std::string>();
      if (r.id != "xi" + std::to_string(index)) throw std::runtime_error("orbit ids out of order at " + r.id);
      for (const auto& lbl : j.at("support")) r.support.push_back(rs.index(lbl.get<std::string>()));
      r.dim_stab = j.at("dim_stab").get<int>();
      const auto a = j.at("component_group").get<std::string>();
      if (a == "1") r.component_group = ComponentGroup::kTrivial;
      else if (a == "S3") r.component_group = ComponentGroup::kS3;
      else throw std::runtime_error("unknown component group " + a);
      r.reductive_type = j.at("reductive_type").get<std::string>();
      r.count_text = j.at("count").get<std::string>();
      r.count = QPolynomial::parse(r.count_text);
      r.dim_b_stab = j.at("dim_b_stab").get<int>();
      r.phi_geq_size = j.at("phi_geq").get<int>();
      const auto lam = j.at("cocharacter").get<std::vector<int>>();
      if (lam.size() != 4) throw std::runtime_error("cocharacter of " + r.id + " needs 4 entries");
      r.cocharacter.coeffs = {lam[0], lam[1], lam[2], lam[3]};
      t.orbits_.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed orbit table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed orbit table: ") + e.what());
  }
  for (const auto& r : t.orbits_) t.type(r.reductive_type);
  return t;
}

const OrbitTable& OrbitTable::get() {
  static const OrbitTable t = from_json(generated::kOrbitData);
  return t;
}

const OrbitRecord& OrbitTable::find(const std::string& id) const {
  std::string key = id;
  if (key.rfind("xi", 0) == 0) key = key.substr(2);
  else if (key.rfind("ξ", 0) == 0) key = key.substr(std::string("ξ").size());
  if (key.rfind('_', 0) == 0) key = key.substr(1);
  int i = 0;
  try {
    std::size_t used = 0;
    i = std::stoi(key, &used);
    if (used != key.size()) i = 0;
  } catch (const std::exception&) {
    i = 0;
  }
  if (i < 1 || i > static_cast<int>(orbits_.size())) throw std::out_of_range("unknown orbit representative '" + id + "'");
  return orbits_[i - 1];
}

const ReductiveType& OrbitTable::type(const std::string& name) const {
  for (const auto& t : types_)
    if (t.name == name) return t;
  throw std::out_of_range("unknown reductive type '" + name + "'");
}

}  // namespace f4x
