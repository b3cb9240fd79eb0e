#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "parafock/expansion.hpp"
#include "parafock/serialize.hpp"
#include "parafock/statistics.hpp"

namespace parafock {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

inline const std::vector<std::string>& all_report_sections() {
  static const std::vector<std::string> sections = {"dimensions", "haldane", "positivity",
                                                    "diagnostics", "verify"};
  return sections;
}

/// Machine-readable run summary. `doc` is a pure function of the inputs:
/// rationals are emitted as "num/den" strings and every container is iterated
/// in a fixed order, so identical arguments produce byte-identical files.
struct StatisticsReport {
  Json doc;
  bool symmetry_violation = false;  // surfaces as CLI exit code 4
};

namespace detail {

inline Json partition_json(const Partition& lambda) {
  Json arr = Json::array();
  for (int part : lambda.parts) arr.push_back(part);
  return arr;
}

inline Json witness_json(const std::vector<Rational>& w) {
  Json arr = Json::array();
  for (const auto& e : w) arr.push_back(e.str());
  return arr;
}

inline Json psd_json(const RationalMatrix& block) {
  const PsdVerdict verdict = psd_check(block);
  Json j;
  j["verdict"] = verdict.is_psd() ? "PSD" : "INDEFINITE";
  if (!verdict.is_psd()) {
    j["witness"] = witness_json(*verdict.witness);
    j["value"] = verdict.witness_value.str();
  }
  return j;
}

}  // namespace detail

/// Assemble the report document. `preset` may be empty when the spec came from
/// a serialized file, in which case the verify section is skipped (the
/// published forms are tied to preset identities). An empty selection yields
/// the spec echo only. A SymmetryViolation inside a section is recorded in
/// diagnostics and the remaining sections still run.
inline StatisticsReport build_report(const std::optional<PresetId>& preset,
                                     const AlgebraSpec& spec, int table_n,
                                     const std::optional<std::vector<std::string>>& selection) {
  spec.validate();
  if (table_n < 0 || table_n > spec.max_n)
    throw std::invalid_argument("build_report: table depth must lie in 0..max_n");
  const std::vector<std::string> sections = selection ? *selection : all_report_sections();
  for (const auto& s : sections) {
    const auto& known = all_report_sections();
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw std::invalid_argument("build_report: unknown section '" + s + "'");
  }

  StatisticsReport report;
  Json& doc = report.doc;
  doc["schema_version"] = kSchemaVersion;
  doc["engine_version"] = kEngineVersion;
  doc["preset"] = preset ? Json(preset->name()) : Json(nullptr);
  doc["modes"] = spec.modes;
  doc["table_n"] = table_n;
  doc["spec"] = spec_to_json(spec);
  doc["sections"] = sections;

  Json symmetry = Json{{"ok", true}};
  auto record_violation = [&](const SymmetryViolation& v) {
    report.symmetry_violation = true;
    symmetry = Json{{"ok", false},
                    {"row", v.row},
                    {"col", v.col},
                    {"upper", v.upper.str()},
                    {"lower", v.lower.str()},
                    {"what", v.what()}};
  };

  // Length-N multiset orthogonality, shared by several sections.
  std::vector<std::optional<bool>> ortho(static_cast<std::size_t>(table_n) + 1);
  auto orthogonal_at = [&](int n) {
    auto& slot = ortho[static_cast<std::size_t>(n)];
    if (!slot) slot = multiset_orthogonality_check(spec, n);
    return *slot;
  };

  auto wants = [&](const std::string& s) {
    return std::find(sections.begin(), sections.end(), s) != sections.end();
  };

  if (wants("dimensions")) {
    Json rows = Json::array();
    try {
      for (int n = 0; n <= table_n; ++n) {
        Json row;
        row["n"] = n;
        Json parts = Json::array();
        for (const Partition& lambda : partitions_of(n, spec.modes)) {
          Json p;
          p["lambda"] = detail::partition_json(lambda);
          p["d"] = d_lambda(spec, lambda);
          p["multisets"] = assignment_count(lambda, spec.modes);
          parts.push_back(std::move(p));
        }
        row["partitions"] = std::move(parts);
        const bool blocks = n == 0 || orthogonal_at(n);
        row["counting"] = blocks ? "multiset-blocks" : "full-basis-rank";
        try {
          row["D"] = fock_dimension(spec, n);
        } catch (const GuardExceeded& g) {
          row["D"] = nullptr;
          row["skipped"] = g.what();
        }
        rows.push_back(std::move(row));
      }
      doc["dimensions"] = Json{{"rows", std::move(rows)}};
    } catch (const SymmetryViolation& v) {
      record_violation(v);
      doc["dimensions"] = Json{{"skipped", "symmetry violation"}, {"rows", std::move(rows)}};
    }
  }

  if (wants("haldane")) {
    Json records = Json::array();
    try {
      for (int n = 1; n <= table_n; ++n) {
        for (int k = 1; n + k <= table_n; ++k) {
          if (n + k - 1 > spec.modes) continue;  // no distinct reference word
          const HaldaneRecord rec = haldane_g(spec, n, k);
          Json j;
          j["n"] = rec.n;
          j["k"] = rec.k;
          j["d_n"] = rec.d_n;
          j["d_n_plus_k"] = rec.d_nk;
          j["g"] = rec.g.str();
          records.push_back(std::move(j));
        }
      }
      doc["haldane"] = Json{{"records", std::move(records)}};
    } catch (const SymmetryViolation& v) {
      record_violation(v);
      doc["haldane"] = Json{{"skipped", "symmetry violation"}, {"records", std::move(records)}};
    }
  }

  if (wants("positivity")) {
    Json blocks = Json::array();
    try {
      for (int n = 1; n <= table_n; ++n) {
        for (const Partition& lambda : partitions_of(n, spec.modes)) {
          std::vector<int> modes(static_cast<std::size_t>(lambda.width()));
          std::iota(modes.begin(), modes.end(), 1);
          Json j = detail::psd_json(gram_matrix(spec, multiset_basis(lambda, modes)));
          j["n"] = n;
          j["lambda"] = detail::partition_json(lambda);
          blocks.push_back(std::move(j));
        }
        if (!orthogonal_at(n)) {
          // Multiset blocks do not span the length-n sector; also certify the
          // full word Gram.
          Json j;
          long long words = 1;
          bool guarded = false;
          for (int t = 0; t < n && !guarded; ++t) {
            words *= spec.modes;
            guarded = words * words > kGramEntryGuard;
          }
          if (guarded) {
            j["skipped"] = "full-basis Gram exceeds the entry guard";
          } else {
            j = detail::psd_json(gram_matrix(spec, full_basis(spec.modes, n)));
          }
          j["n"] = n;
          j["basis"] = "full";
          blocks.push_back(std::move(j));
        }
      }
      doc["positivity"] = Json{{"blocks", std::move(blocks)}};
    } catch (const SymmetryViolation& v) {
      record_violation(v);
      doc["positivity"] = Json{{"skipped", "symmetry violation"}, {"blocks", std::move(blocks)}};
    }
  }

  if (wants("diagnostics")) {
    Json diag;
    Json ortho_rows = Json::array();
    Json invariance_rows = Json::array();
    try {
      for (int n = 1; n <= table_n; ++n)
        ortho_rows.push_back(Json{{"n", n}, {"ok", orthogonal_at(n)}});
      const int inv_cap = std::min({table_n, spec.modes, 4});
      for (int n = 2; n <= inv_cap; ++n) {
        std::vector<int> indices(static_cast<std::size_t>(n));
        std::iota(indices.begin(), indices.end(), 1);
        const RationalMatrix generic = gram_generic(spec, indices);
        const RegularDecomposition dec = regular_decompose(generic, n);
        invariance_rows.push_back(Json{{"n", n},
                                       {"left_invariant", left_invariance_check(generic, n)},
                                       {"regular_residual", dec.residual}});
      }
      if (table_n > inv_cap && inv_cap >= 2)
        diag["invariance_note"] = "generic checks capped at N=4 (N! x N! growth)";
    } catch (const SymmetryViolation& v) {
      record_violation(v);
    }
    diag["gram_symmetry"] = symmetry;
    diag["multiset_orthogonality"] = std::move(ortho_rows);
    diag["invariance"] = std::move(invariance_rows);
    doc["diagnostics"] = std::move(diag);
  } else if (report.symmetry_violation) {
    doc["diagnostics"] = Json{{"gram_symmetry", symmetry}};
  }

  if (wants("verify")) {
    Json verify;
    if (!preset) {
      verify["triple_relation"] = Json{{"status", "skipped"},
                                       {"reason", "spec loaded from file; published forms are tied to presets"}};
      verify["transition_expansions"] = verify["triple_relation"];
    } else {
      const int n_max = 2;
      if (spec.max_n < n_max + 2) {
        verify["triple_relation"] =
            Json{{"status", "skipped"}, {"reason", "max_n too small for N<=2 verification"}};
        verify["transition_expansions"] = verify["triple_relation"];
      } else {
        if (auto params = triple_params(*preset)) {
          const bool ok = verify_triple_relation(spec, params->x, params->y, params->z,
                                                 params->q, n_max);
          verify["triple_relation"] = Json{{"status", ok ? "pass" : "fail"},
                                           {"x", params->x.str()},
                                           {"y", params->y.str()},
                                           {"z", params->z.str()},
                                           {"q", params->q.str()},
                                           {"n_max", n_max}};
        } else {
          verify["triple_relation"] =
              Json{{"status", "skipped"},
                   {"reason", "preset is outside the scalar affine q-bracket family"}};
        }
        if (has_published_expansion(*preset)) {
          bool all = true;
          int pairs = 0;
          for (int i = 1; i <= spec.modes && all; ++i) {
            for (int j = 1; j <= spec.modes && all; ++j) {
              const NormalOrderedOperator op = instantiate_expansion(*preset, spec, i, j);
              all = verify_transition(spec, op, i, j, n_max);
              ++pairs;
            }
          }
          verify["transition_expansions"] = Json{{"status", all ? "pass" : "fail"},
                                                 {"n_max", n_max},
                                                 {"pairs_checked", pairs}};
        } else {
          verify["transition_expansions"] =
              Json{{"status", "skipped"}, {"reason", "no published expansion for this preset"}};
        }
      }
    }
    doc["verify"] = std::move(verify);
  }

  return report;
}

namespace detail {

inline std::string csv_escape_partition(const Json& lambda) {
  std::string s;
  for (const auto& part : lambda) {
    if (!s.empty()) s += '+';
    s += std::to_string(part.get<int>());
  }
  return s;
}

inline std::string csv_join_witness(const Json& witness) {
  std::string s;
  for (const auto& e : witness) {
    if (!s.empty()) s += ';';
    s += e.get<std::string>();
  }
  return s;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace detail

inline std::string report_to_json_text(const StatisticsReport& report) {
  return report.doc.dump(2) + "\n";
}

/// CSV emission: one table per file inside `dir`, plus manifest.json carrying
/// the spec echo and the file list.
inline void emit_report_csv(const StatisticsReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const Json& doc = report.doc;
  Json files = Json::array();

  if (doc.contains("dimensions")) {
    std::string csv = "n,lambda,d,multisets,counting,D\n";
    for (const auto& row : doc["dimensions"]["rows"]) {
      const std::string d_str = row["D"].is_null() ? "" : std::to_string(row["D"].get<long long>());
      if (row["partitions"].empty()) {
        csv += std::to_string(row["n"].get<int>()) + ",,,," +
               row["counting"].get<std::string>() + "," + d_str + "\n";
      }
      for (const auto& p : row["partitions"]) {
        csv += std::to_string(row["n"].get<int>()) + "," +
               detail::csv_escape_partition(p["lambda"]) + "," +
               std::to_string(p["d"].get<long long>()) + "," +
               std::to_string(p["multisets"].get<long long>()) + "," +
               row["counting"].get<std::string>() + "," + d_str + "\n";
      }
    }
    detail::write_file(dir / "dimensions.csv", csv);
    files.push_back("dimensions.csv");
  }
  if (doc.contains("haldane")) {
    std::string csv = "n,k,d_n,d_n_plus_k,g\n";
    for (const auto& r : doc["haldane"]["records"]) {
      csv += std::to_string(r["n"].get<int>()) + "," + std::to_string(r["k"].get<int>()) + "," +
             std::to_string(r["d_n"].get<int>()) + "," +
             std::to_string(r["d_n_plus_k"].get<int>()) + "," + r["g"].get<std::string>() + "\n";
    }
    detail::write_file(dir / "haldane.csv", csv);
    files.push_back("haldane.csv");
  }
  if (doc.contains("positivity")) {
    std::string csv = "n,lambda,basis,verdict,witness,value\n";
    for (const auto& b : doc["positivity"]["blocks"]) {
      const std::string lambda = b.contains("lambda") ? detail::csv_escape_partition(b["lambda"]) : "";
      const std::string basis = b.contains("basis") ? b["basis"].get<std::string>() : "multiset";
      std::string verdict = b.contains("verdict") ? b["verdict"].get<std::string>() : "";
      if (b.contains("skipped")) verdict = "skipped: " + b["skipped"].get<std::string>();
      csv += std::to_string(b["n"].get<int>()) + "," + lambda + "," + basis + "," + verdict + "," +
             (b.contains("witness") ? detail::csv_join_witness(b["witness"]) : "") + "," +
             (b.contains("value") ? b["value"].get<std::string>() : "") + "\n";
    }
    detail::write_file(dir / "positivity.csv", csv);
    files.push_back("positivity.csv");
  }
  if (doc.contains("diagnostics")) {
    const Json& diag = doc["diagnostics"];
    std::string csv = "check,n,ok,detail\n";
    csv += "gram_symmetry,,"
           + std::string(diag["gram_symmetry"]["ok"].get<bool>() ? "true" : "false") + "," +
           (diag["gram_symmetry"]["ok"].get<bool>()
                ? std::string()
                : diag["gram_symmetry"]["what"].get<std::string>()) +
           "\n";
    if (diag.contains("multiset_orthogonality"))
      for (const auto& r : diag["multiset_orthogonality"])
        csv += "multiset_orthogonality," + std::to_string(r["n"].get<int>()) + "," +
               (r["ok"].get<bool>() ? "true" : "false") + ",\n";
    if (diag.contains("invariance"))
      for (const auto& r : diag["invariance"])
        csv += "left_invariance," + std::to_string(r["n"].get<int>()) + "," +
               (r["left_invariant"].get<bool>() ? "true" : "false") + ",residual=" +
               (r["regular_residual"].get<bool>() ? "true" : "false") + "\n";
    detail::write_file(dir / "diagnostics.csv", csv);
    files.push_back("diagnostics.csv");
  }
  if (doc.contains("verify")) {
    const Json& verify = doc["verify"];
    std::string csv = "check,status,detail\n";
    for (const char* key : {"triple_relation", "transition_expansions"}) {
      if (!verify.contains(key)) continue;
      const Json& v = verify[key];
      std::string detail_col;
      if (v.contains("reason")) detail_col = v["reason"].get<std::string>();
      if (v.contains("x"))
        detail_col = "x=" + v["x"].get<std::string>() + " y=" + v["y"].get<std::string>() +
                     " z=" + v["z"].get<std::string>() + " q=" + v["q"].get<std::string>();
      csv += std::string(key) + "," + v["status"].get<std::string>() + "," + detail_col + "\n";
    }
    detail::write_file(dir / "verify.csv", csv);
    files.push_back("verify.csv");
  }

  Json manifest;
  manifest["schema_version"] = doc["schema_version"];
  manifest["engine_version"] = doc["engine_version"];
  manifest["preset"] = doc["preset"];
  manifest["modes"] = doc["modes"];
  manifest["table_n"] = doc["table_n"];
  manifest["files"] = std::move(files);
  manifest["spec"] = doc["spec"];
  detail::write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace parafock
