#include "coast/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include "coast/error.hpp"
#include "coast/kernels.hpp"

namespace coast {

std::string state_name(StateLabel s) {
  switch (s) {
    case StateLabel::source: return "source";
    case StateLabel::target: return "target";
    default: return "other";
  }
}

std::size_t Dataset::feature_index(const std::string& name) const {
  for (std::size_t j = 0; j < features.size(); ++j)
    if (features[j] == name) return j;
  throw ValidationError("unknown feature name: " + name);
}

void Dataset::validate() const {
  if (features.empty()) throw ValidationError("dataset has no features");
  if (values.rows() == 0) throw ValidationError("dataset has no samples");
  if (values.cols() != features.size())
    throw ValidationError("feature name count does not match value columns");
  std::unordered_set<std::string> seen;
  for (const auto& f : features)
    if (!seen.insert(f).second) throw ValidationError("duplicate feature name: " + f);
  for (std::size_t j = 0; j < values.cols(); ++j)
    for (std::size_t i = 0; i < values.rows(); ++i)
      if (!std::isfinite(values(i, j)))
        throw ValidationError("non-finite value at sample " + std::to_string(i + 1) +
                              ", feature " + features[j]);
}

void StatePair::validate() const {
  source.validate();
  target.validate();
  if (source.features.size() != target.features.size())
    throw ValidationError("source and target have different feature counts");
  for (std::size_t j = 0; j < source.features.size(); ++j)
    if (source.features[j] != target.features[j])
      throw ValidationError("feature mismatch at column " + std::to_string(j + 1) + ": '" +
                            source.features[j] + "' vs '" + target.features[j] + "'");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t file_row, const std::string& column) {
  const std::string s = trim(raw);
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ValidationError("non-numeric cell '" + raw + "' at row " + std::to_string(file_row) +
                          ", column " + column);
  return v;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path, StateLabel state,
                     const std::string& other_label) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty file: " + path.string());
  std::vector<std::string> header = split_csv_line(line);
  for (auto& h : header) h = trim(h);

  std::vector<std::vector<std::string>> raw_rows;
  std::size_t file_row = 1;
  while (std::getline(in, line)) {
    ++file_row;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw ValidationError("ragged row " + std::to_string(file_row) + " in " + path.string() +
                            ": expected " + std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
    raw_rows.push_back(std::move(fields));
  }
  if (raw_rows.empty()) throw ValidationError("empty body in " + path.string());

  Dataset ds;
  ds.state = state;
  ds.other_label = other_label;
  ds.features = header;
  ds.values = Matrix(raw_rows.size(), header.size());
  for (std::size_t i = 0; i < raw_rows.size(); ++i)
    for (std::size_t j = 0; j < header.size(); ++j)
      ds.values(i, j) = parse_cell(raw_rows[i][j], i + 2, header[j]);
  ds.validate();
  return ds;
}

Standardizer pooled_standardizer(const StatePair& pair) {
  pair.validate();
  const std::size_t p = pair.source.p();
  const double n_total = static_cast<double>(pair.source.n() + pair.target.n());
  Standardizer z;
  z.mean.resize(p);
  z.sd.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    const double s = kernels::sum(pair.source.values.col(j), pair.source.n()) +
                     kernels::sum(pair.target.values.col(j), pair.target.n());
    const double m = s / n_total;
    double ss = 0.0;
    for (const Dataset* ds : {&pair.source, &pair.target}) {
      const double* c = ds->values.col(j);
      for (std::size_t i = 0; i < ds->n(); ++i) {
        const double d = c[i] - m;
        ss += d * d;
      }
    }
    const double sd = std::sqrt(ss / n_total);
    if (sd == 0.0)
      throw ValidationError("zero pooled standard deviation for feature " +
                            pair.source.features[j]);
    z.mean[j] = m;
    z.sd[j] = sd;
  }
  return z;
}

Dataset apply_standardizer(const Dataset& ds, const Standardizer& z) {
  if (z.mean.size() != ds.p()) throw ValidationError("standardizer dimension mismatch");
  Dataset out = ds;
  for (std::size_t j = 0; j < ds.p(); ++j) {
    double* c = out.values.col(j);
    const double inv = 1.0 / z.sd[j];
    for (std::size_t i = 0; i < ds.n(); ++i) c[i] = (c[i] - z.mean[j]) * inv;
  }
  return out;
}

StatePair standardize(const StatePair& pair, Standardizer& out_params) {
  out_params = pooled_standardizer(pair);
  return {apply_standardizer(pair.source, out_params),
          apply_standardizer(pair.target, out_params)};
}

StatePair standardize(const StatePair& pair) {
  Standardizer z;
  return standardize(pair, z);
}

std::vector<double> feature_means(const Dataset& ds) {
  std::vector<double> m(ds.p());
  for (std::size_t j = 0; j < ds.p(); ++j) m[j] = ds.values.col_mean(j);
  return m;
}

}  // namespace coast
