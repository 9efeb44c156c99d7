#pragma once

#include <string>
#include <vector>

#include "f4x/chevalley.hpp"
#include "f4x/qpoly.hpp"
#include "f4x/rootsys.hpp"

namespace f4x {

enum class ComponentGroup { kTrivial, kS3 };

struct ReductiveType {
  std::string name;
  int dim = 0;
  QPolynomial order;
};

/// One orbit of the classification: representative, stabilizer data and
/// point-count polynomial.
struct OrbitRecord {
  int index = 0;  // 1..24
  std::string id;  // "xi1".."xi24"
  std::vector<int> support;  // root indices, in table order
  int dim_stab = 0;
  ComponentGroup component_group = ComponentGroup::kTrivial;
  std::string reductive_type;
  std::string count_text;
  QPolynomial count;
  int dim_b_stab = 0;
  int phi_geq_size = 0;
  Cocharacter cocharacter;

  int dim_orbit() const { return kDimV - dim_stab; }
  VElement rep() const { return VElement::from_support(support); }
  std::vector<std::string> support_labels() const;
};

/// The orbit tables, loaded from the data file compiled into the library.
class OrbitTable {
 public:
  static const OrbitTable& get();
  /// Parses a table document; throws std::runtime_error on schema errors.
  static OrbitTable from_json(const std::string& text);

  const std::vector<OrbitRecord>& orbits() const { return orbits_; }
  /// Accepts "xi5", "5".  Throws std::out_of_range for unknown ids.
  const OrbitRecord& find(const std::string& id) const;
  const OrbitRecord& at(int index) const { return orbits_.at(index - 1); }
  const ReductiveType& type(const std::string& name) const;
  const std::vector<ReductiveType>& types() const { return types_; }

  /// FNV-1a 64 of the data file bytes, as 16 hex digits.
  const std::string& checksum() const { return checksum_; }
  const std::string& source() const { return source_; }

 private:
  std::vector<OrbitRecord> orbits_;
  std::vector<ReductiveType> types_;
  std::string checksum_;
  std::string source_;
};

std::string fnv1a64_hex(const std::string& bytes);

}  // namespace f4x
