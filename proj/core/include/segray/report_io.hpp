#pragma once

// Deterministic report files: RFC-4180 CSV with a provenance comment line
// (config hash + seed) and JSON summaries with stable key order.  Doubles are
// printed with %.17g so reruns are byte-identical.

#include <cstdint>
#include <string>
#include <vector>

#include "segray/boundary_probe.hpp"
#include "segray/ray_energy.hpp"
#include "segray/segment.hpp"
#include "segray/verify.hpp"

namespace segray {

std::string format_double(double v);

// RFC-4180 quoting (commas, quotes, newlines).
std::string csv_escape(const std::string& field);

struct CsvTable {
  std::vector<std::string> comments;  // emitted as leading "# ..." lines
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  std::string to_string() const;
  void write(const std::string& path) const;
};

std::uint64_t fnv1a64(const std::string& bytes);
std::string hash_hex(std::uint64_t h);

struct RunMeta {
  std::string config_hash;  // hex of fnv1a64 over the raw config bytes
  std::uint64_t seed = 0;
  std::vector<std::string> comment_lines() const;
};

// Canned serializations for the module reports.
CsvTable identity_suite_csv(const IdentitySuiteResult& res, const RunMeta& meta);
CsvTable verification_csv(const VerificationReport& rep, const RunMeta& meta);
CsvTable probe_sequence_csv(const BoundarySequenceReport& rep, const RunMeta& meta);
CsvTable lemma21_csv(const Lemma21Report& rep, const RunMeta& meta);

// Plot-ready series.
CsvTable margin_scatter_csv(const VerificationReport& rep, const RunMeta& meta);
CsvTable m_quotient_csv(const std::vector<std::array<double, 3>>& rows,
                        const RunMeta& meta);  // (s, t, quotient)

void write_text_file(const std::string& path, const std::string& content);

} // namespace segray
