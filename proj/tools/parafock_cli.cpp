// Command-line front end: statistics reports, generic Gram matrices with
// their regular-representation decomposition, and relation/expansion checks.
//
// Exit codes: 0 success, 2 argument error, 3 guard exceeded, 4 internal
// inconsistency (Gram symmetry violation; the report is still written).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parafock/report.hpp"

namespace {

using namespace parafock;

struct PresetFlags {
  std::string name;
  std::string spec_path;
  int p = 0;
  std::string q = "1/2";
  int sign = 1;
  std::string variant = "affine";
  int mb = 0;
  int mf = 0;
};

void add_preset_flags(CLI::App* cmd, PresetFlags& flags) {
  cmd->add_option("--preset", flags.name,
                  "preset name: green-parabose, green-parafermi, govorkov, quon, "
                  "palev-fermi, palev-bose, palev-fermi-f, palev-bose-f, "
                  "klein-marshalek, palev-super, okubo");
  cmd->add_option("--spec", flags.spec_path, "path to a serialized AlgebraSpec (alternative to --preset)");
  cmd->add_option("--p", flags.p, "order parameter p of the para families");
  cmd->add_option("--q", flags.q, "quon deformation parameter, e.g. 1/2 or -3/4");
  cmd->add_option("--sign", flags.sign, "govorkov lambda: +1 or -1")->check(CLI::IsMember({1, -1}));
  cmd->add_option("--variant", flags.variant, "level-function shape for the -f families")
      ->check(CLI::IsMember({"affine", "step"}));
  cmd->add_option("--mb", flags.mb, "palev-super: number of bosonic modes");
  cmd->add_option("--mf", flags.mf, "palev-super: number of fermionic modes");
}

int require_p(const PresetFlags& flags) {
  if (flags.p < 1) throw std::invalid_argument("this preset requires --p <positive integer>");
  return flags.p;
}

PresetId make_preset(const PresetFlags& flags) {
  const auto variant =
      flags.variant == "step" ? PresetId::Variant::Step : PresetId::Variant::Affine;
  if (flags.name == "green-parabose") return PresetId::green_parabose(require_p(flags));
  if (flags.name == "green-parafermi") return PresetId::green_parafermi(require_p(flags));
  if (flags.name == "govorkov") return PresetId::govorkov(require_p(flags), flags.sign);
  if (flags.name == "quon") return PresetId::quon(Rational::parse(flags.q));
  if (flags.name == "palev-fermi") return PresetId::palev_fermi(require_p(flags));
  if (flags.name == "palev-bose") return PresetId::palev_bose(require_p(flags));
  if (flags.name == "palev-fermi-f") return PresetId::palev_fermi_f(require_p(flags), variant);
  if (flags.name == "palev-bose-f") return PresetId::palev_bose_f(require_p(flags), variant);
  if (flags.name == "klein-marshalek") return PresetId::klein_marshalek();
  if (flags.name == "palev-super") return PresetId::palev_super(flags.mb, flags.mf, require_p(flags));
  if (flags.name == "okubo") return PresetId::okubo(require_p(flags));
  throw std::invalid_argument("unknown preset '" + flags.name + "'");
}

AlgebraSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return spec_from_string(buf.str());
}

/// Resolve flags to (optional preset, spec). The guard depth is kept at least
/// at the default 6 and two above the table depth so the N<=2 verifications
/// have headroom.
std::pair<std::optional<PresetId>, AlgebraSpec> resolve_spec(const PresetFlags& flags,
                                                             int modes, int table_n) {
  if (!flags.spec_path.empty()) {
    if (!flags.name.empty())
      throw std::invalid_argument("--preset and --spec are mutually exclusive");
    AlgebraSpec spec = load_spec_file(flags.spec_path);
    if (modes > 0 && modes != spec.modes)
      throw std::invalid_argument("--modes disagrees with the spec file");
    return {std::nullopt, std::move(spec)};
  }
  if (flags.name.empty())
    throw std::invalid_argument("one of --preset or --spec is required");
  const PresetId id = make_preset(flags);
  const int m = id.kind == PresetId::Kind::PalevSuper ? id.modes_bose + id.modes_fermi : modes;
  if (m < 1) throw std::invalid_argument("--modes is required and must be >= 1");
  if (id.kind == PresetId::Kind::PalevSuper && modes > 0 && modes != m)
    throw std::invalid_argument("--modes disagrees with --mb + --mf");
  return {id, build(id, m, std::max(6, table_n + 2))};
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("--indices: empty entry");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("--indices: no indices given");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  detail::write_file(std::filesystem::path(path), text);
}

int run_report(const PresetFlags& flags, int modes, int table_n,
               const std::string& sections_arg, const std::string& format,
               const std::string& out) {
  auto [preset, spec] = resolve_spec(flags, modes, table_n);
  std::optional<std::vector<std::string>> sections;
  if (sections_arg == "none") {
    sections.emplace();  // spec echo only
  } else if (!sections_arg.empty()) {
    sections.emplace();
    std::stringstream ss(sections_arg);
    std::string item;
    while (std::getline(ss, item, ',')) sections->push_back(item);
  }
  const auto start = std::chrono::steady_clock::now();
  const StatisticsReport report = build_report(preset, spec, table_n, sections);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cerr << "report computed in " << elapsed.count() << " ms\n";

  if (format == "json") {
    write_text(out, report_to_json_text(report));
  } else if (format == "csv") {
    if (out.empty()) throw std::invalid_argument("--format csv requires --out <directory>");
    emit_report_csv(report, out);
  } else {
    throw std::invalid_argument("--format must be json or csv");
  }
  return report.symmetry_violation ? 4 : 0;
}

int run_gram(const PresetFlags& flags, int modes, const std::string& indices_arg,
             const std::string& out) {
  const std::vector<int> indices = parse_indices(indices_arg);
  int m = modes;
  if (m <= 0)
    for (int i : indices) m = std::max(m, i);
  auto [preset, spec] = resolve_spec(flags, m, 0);

  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["engine_version"] = kEngineVersion;
  doc["preset"] = preset ? Json(preset->name()) : Json(nullptr);
  doc["indices"] = indices;
  int exit_code = 0;
  try {
    const RationalMatrix g = gram_generic(spec, indices);
    const int n = static_cast<int>(indices.size());
    doc["matrix"] = matrix_to_json(g);
    const RegularDecomposition dec = regular_decompose(g, n);
    Json coeffs = Json::array();
    for (const auto& [pi, c] : dec.coefficients)
      coeffs.push_back(Json{{"pi", perm_key(pi)}, {"c", c.str()}});
    doc["decomposition"] = Json{{"coefficients", std::move(coeffs)}, {"residual", dec.residual}};
    doc["left_invariant"] = left_invariance_check(g, n);
  } catch (const SymmetryViolation& v) {
    doc["symmetry_violation"] = Json{{"row", v.row}, {"col", v.col}, {"upper", v.upper.str()},
                                     {"lower", v.lower.str()}, {"what", v.what()}};
    exit_code = 4;
  }
  write_text(out, doc.dump(2) + "\n");
  return exit_code;
}

int run_verify(const PresetFlags& flags, int modes) {
  auto [preset, spec] = resolve_spec(flags, modes, 0);
  if (!preset) throw std::invalid_argument("verify needs --preset (published forms are preset-bound)");
  const int n_max = 2;
  bool all_pass = true;

  if (auto params = triple_params(*preset)) {
    const bool ok =
        verify_triple_relation(spec, params->x, params->y, params->z, params->q, n_max);
    all_pass = all_pass && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " triple-relation x=" << params->x.str()
              << " y=" << params->y.str() << " z=" << params->z.str()
              << " q=" << params->q.str() << " n_max=" << n_max << "\n";
  } else {
    std::cout << "SKIP triple-relation (preset outside the scalar affine q-bracket family)\n";
  }

  if (has_published_expansion(*preset)) {
    bool ok = true;
    int pairs = 0;
    for (int i = 1; i <= spec.modes && ok; ++i) {
      for (int j = 1; j <= spec.modes && ok; ++j) {
        ok = verify_transition(spec, instantiate_expansion(*preset, spec, i, j), i, j, n_max);
        ++pairs;
      }
    }
    all_pass = all_pass && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " transition-expansion pairs=" << pairs
              << " n_max=" << n_max << "\n";
  } else {
    std::cout << "SKIP transition-expansion (no published expansion for this preset)\n";
  }

  std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact parastatistics Fock-space engine"};
  app.set_version_flag("--version", std::string(parafock::kEngineVersion));
  app.require_subcommand(1);

  PresetFlags report_flags, gram_flags, verify_flags;
  int report_modes = 0, gram_modes = 0, verify_modes = 0;
  int table_n = 4;
  std::string sections, format = "json", report_out, gram_indices, gram_out;

  CLI::App* report_cmd = app.add_subcommand("report", "dimension/positivity/statistics report");
  add_preset_flags(report_cmd, report_flags);
  report_cmd->add_option("--modes", report_modes, "number of modes M");
  report_cmd->add_option("--max-n", table_n, "table depth: sectors N = 0..max-n")->check(CLI::Range(0, 6));
  report_cmd->add_option("--sections", sections,
                         "comma list of dimensions,haldane,positivity,diagnostics,verify "
                         "(default all; 'none' emits the spec echo only)");
  report_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  report_cmd->add_option("--out", report_out, "output file (json) or directory (csv); stdout if omitted");

  CLI::App* gram_cmd = app.add_subcommand("gram", "generic Gram matrix and its c(pi) decomposition");
  add_preset_flags(gram_cmd, gram_flags);
  gram_cmd->add_option("--modes", gram_modes, "number of modes M (default: max index)");
  gram_cmd->add_option("--indices", gram_indices, "comma list of distinct mode indices, e.g. 1,2,3")
      ->required();
  gram_cmd->add_option("--out", gram_out, "output file; stdout if omitted");

  CLI::App* verify_cmd = app.add_subcommand("verify", "triple-relation and expansion checks only");
  add_preset_flags(verify_cmd, verify_flags);
  verify_cmd->add_option("--modes", verify_modes, "number of modes M");

  try {
    app.parse(argc, argv);
    if (report_cmd->parsed())
      return run_report(report_flags, report_modes, table_n, sections, format, report_out);
    if (gram_cmd->parsed()) return run_gram(gram_flags, gram_modes, gram_indices, gram_out);
    if (verify_cmd->parsed()) return run_verify(verify_flags, verify_modes);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const parafock::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const parafock::SymmetryViolation& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
