#include "segray/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace segray {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string CsvTable::to_string() const {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ",";
    out += csv_escape(columns[i]);
  }
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += csv_escape(row[i]);
    }
    out += "\n";
  }
  return out;
}

void CsvTable::write(const std::string& path) const {
  write_text_file(path, to_string());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> RunMeta::comment_lines() const {
  return {"config_hash=" + config_hash + " seed=" + std::to_string(seed)};
}

namespace {
std::string fd(double v) { return format_double(v); }
} // namespace

CsvTable identity_suite_csv(const IdentitySuiteResult& res, const RunMeta& meta) {
  CsvTable t;
  t.comments = meta.comment_lines();
  t.columns = {"identity_id", "x1", "x2", "x3", "y1", "y2", "y3",
               "h",           "lhs", "rhs", "abs_err", "rel_err", "ok"};
  for (const auto& r : res.reports) {
    t.add_row({r.identity_id, fd(r.x.n > 0 ? r.x[0] : 0.0),
               fd(r.x.n > 1 ? r.x[1] : 0.0), fd(r.x.n > 2 ? r.x[2] : 0.0),
               fd(r.y.n > 0 ? r.y[0] : 0.0), fd(r.y.n > 1 ? r.y[1] : 0.0),
               fd(r.y.n > 2 ? r.y[2] : 0.0), fd(r.h), fd(r.lhs_fd),
               fd(r.rhs_formula), fd(r.abs_err), fd(r.rel_err),
               r.ok ? "1" : "0"});
  }
  return t;
}

CsvTable verification_csv(const VerificationReport& rep, const RunMeta& meta) {
  CsvTable t;
  t.comments = meta.comment_lines();
  t.comments.push_back("cutoff=" + format_double(rep.cutoff) +
                       " samples=" + std::to_string(rep.samples));
  t.columns = {"x1", "x2", "y1", "y2", "t", "r", "e_f", "bound", "margin"};
  for (const auto& r : rep.rows) {
    t.add_row({fd(r.x[0]), fd(r.x[1]), fd(r.y[0]), fd(r.y[1]), fd(r.t), fd(r.r),
               fd(r.e_f), fd(r.bound), fd(r.margin)});
  }
  return t;
}

CsvTable probe_sequence_csv(const BoundarySequenceReport& rep, const RunMeta& meta) {
  CsvTable t;
  t.comments = meta.comment_lines();
  t.comments.push_back("mode=" + probe_mode_name(rep.mode));
  t.columns = {"k", "boundary_distance", "r", "e_f", "ratio"};
  for (const auto& s : rep.steps) {
    t.add_row({std::to_string(s.k), fd(s.boundary_distance), fd(s.r), fd(s.e_f),
               fd(s.ratio)});
  }
  return t;
}

CsvTable lemma21_csv(const Lemma21Report& rep, const RunMeta& meta) {
  CsvTable t;
  t.comments = meta.comment_lines();
  t.columns = {"item", "quantity", "direction", "s", "fd", "formula", "abs_err"};
  for (const auto& r : rep.residuals) {
    t.add_row({std::to_string(r.item), r.quantity, std::to_string(r.direction),
               fd(r.s), fd(r.fd), fd(r.formula), fd(r.abs_err)});
  }
  return t;
}

CsvTable margin_scatter_csv(const VerificationReport& rep, const RunMeta& meta) {
  CsvTable t;
  t.comments = meta.comment_lines();
  t.columns = {"r", "margin", "t"};
  for (const auto& r : rep.rows) t.add_row({fd(r.r), fd(r.margin), fd(r.t)});
  return t;
}

CsvTable m_quotient_csv(const std::vector<std::array<double, 3>>& rows,
                        const RunMeta& meta) {
  CsvTable t;
  t.comments = meta.comment_lines();
  t.columns = {"s", "t", "quotient"};
  for (const auto& r : rows) t.add_row({fd(r[0]), fd(r[1]), fd(r[2])});
  return t;
}

} // namespace segray
