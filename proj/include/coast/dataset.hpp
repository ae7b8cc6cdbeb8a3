#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "coast/matrix.hpp"

namespace coast {

enum class StateLabel { source, target, other };

std::string state_name(StateLabel s);

// Labeled sample matrix for one state: n rows (samples) x p columns
// (features). Feature names are unique, all entries finite.
struct Dataset {
  StateLabel state = StateLabel::other;
  std::string other_label;  // used when state == other
  std::vector<std::string> features;
  Matrix values;

  std::size_t n() const { return values.rows(); }
  std::size_t p() const { return values.cols(); }
  std::string label() const { return state == StateLabel::other ? other_label : state_name(state); }

  // Index of a named feature; throws ValidationError if absent.
  std::size_t feature_index(const std::string& name) const;

  void validate() const;
};

struct StatePair {
  Dataset source;
  Dataset target;

  void validate() const;  // identical feature names in identical order
};

// Pooled standardization parameters (population sd convention).
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> sd;
};

// CSV: UTF-8, comma-separated, first row header, one sample per row.
Dataset load_dataset(const std::filesystem::path& path, StateLabel state,
                     const std::string& other_label = "");

// (x - m_j) / s_j with m, s computed on the pooled rows of source and target;
// both datasets are transformed with the same parameters.
StatePair standardize(const StatePair& pair);
StatePair standardize(const StatePair& pair, Standardizer& out_params);
Dataset apply_standardizer(const Dataset& ds, const Standardizer& z);
Standardizer pooled_standardizer(const StatePair& pair);

std::vector<double> feature_means(const Dataset& ds);

}  // namespace coast
