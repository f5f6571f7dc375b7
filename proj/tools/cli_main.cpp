#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinideal/errors.hpp"
#include "spinideal/ideals.hpp"
#include "spinideal/textio.hpp"
#include "spinideal/unitary.hpp"

namespace {

using namespace spinideal;

constexpr int kFormatVersion = 1;

struct CommonOptions {
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "Write the result to FILE instead of stdout");
}

Signature parse_signature(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error("signature must be given as P,Q");
  }
  try {
    int p = std::stoi(text.substr(0, comma));
    int q = std::stoi(text.substr(comma + 1));
    return Signature(p, q);
  } catch (const std::invalid_argument&) {
    throw Error("signature must be given as P,Q");
  } catch (const std::out_of_range&) {
    throw Error("signature components out of range");
  }
}

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw Error("cannot open output file " + opts.output);
  out << text;
}

std::string signature_str(const Signature& sig) {
  return "(" + std::to_string(sig.p) + "," + std::to_string(sig.q) + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json report_header(const std::string& command, const Signature& sig) {
  return {{"format_version", kFormatVersion},
          {"command", command},
          {"signature", {sig.p, sig.q}}};
}

std::string json_str(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ---- classify ----------------------------------------------------------

std::string run_classify(const Signature& sig, const std::string& format) {
  MatrixType type = classify(sig);
  int k = involution_count(sig);
  if (format == "json") {
    nlohmann::json j = report_header("classify", sig);
    j["matrix_algebra"] = matrix_type_to_json(type);
    j["k"] = k;
    j["minimal_ideal_dim"] = type.minimal_ideal_dim();
    return json_str(j);
  }
  return type.str() + ", k=" + std::to_string(k) +
         ", ideal_dim=" + std::to_string(type.minimal_ideal_dim()) + "\n";
}

// ---- ideal --------------------------------------------------------------

std::string ideal_text(const Signature& sig, const IdempotentReport& report) {
  std::ostringstream out;
  out << "signature: " << signature_str(sig) << "\n";
  out << "matrix algebra: " << classify(sig).str() << "\n";
  out << "k: " << report.k << "\n";
  out << "generators: ";
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    if (i) out << ", ";
    out << render_blade(report.generators[i]);
  }
  out << "\n";
  out << "factorization:";
  for (Blade g : report.generators) out << " (1 + " << render_blade(g) << ")/2";
  out << "\n";
  out << "f = " << render_multivector_factored(report.f) << "\n";
  out << "idempotent: " << yes_no(report.is_idempotent) << "\n";
  out << "primitive: " << yes_no(report.is_primitive) << "\n";
  out << "ideal dimension: " << report.ideal_dim << "\n";
  out << "division ring: "
      << (report.division_type ? division_type_str(*report.division_type) : "n/a") << "\n";
  out << "basis:\n";
  for (std::size_t i = 0; i < report.ideal_basis.size(); ++i) {
    Blade label = report.ideal_basis_labels[i];
    out << "  " << (label.is_scalar() ? "f" : render_blade(label) + "*f") << " = "
        << render_multivector_factored(report.ideal_basis[i]) << "\n";
  }
  return out.str();
}

std::string run_ideal(const Signature& sig, const std::optional<int>& structure_n,
                      const std::string& generator_list, const std::string& format) {
  IdempotentReport report = [&] {
    if (structure_n) return induce_idempotent(*structure_n, sig);
    std::vector<Blade> generators = parse_blade_list(generator_list);
    Multivector f = build_idempotent(sig, generators);
    return verify_idempotent(sig, f, generators);
  }();

  if (format == "json") {
    nlohmann::json j = report_header("ideal", sig);
    if (structure_n) j["structure"] = "u" + std::to_string(*structure_n);
    j["matrix_algebra"] = matrix_type_to_json(classify(sig));
    j["report"] = idempotent_report_to_json(report);
    return json_str(j);
  }
  return ideal_text(sig, report);
}

// ---- project ------------------------------------------------------------

std::string run_project(const Signature& sig, const std::string& format) {
  ProjectionDecomposition d = recover_by_projection(sig);
  if (format == "json") {
    nlohmann::json j = report_header("project", sig);
    j["decomposition"] = projection_to_json(d);
    return json_str(j);
  }
  std::ostringstream out;
  out << "signature: " << signature_str(sig) << "\n";
  out << "m: " << d.pairs.size() << "\n";
  out << "pairs: ";
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    if (i) out << ", ";
    out << "(" << d.pairs[i].first << "," << d.pairs[i].second << ")";
  }
  out << "\n";
  out << "k: " << d.h_report.k << "\n";
  out << "f_tilde = " << render_multivector_factored(d.f_tilde) << "\n";
  out << "extra generators: ";
  for (std::size_t i = 0; i < d.extra_generators.size(); ++i) {
    if (i) out << ", ";
    out << render_blade(d.extra_generators[i]);
  }
  out << "\n";
  out << "e = " << render_multivector_factored(d.e) << "\n";
  out << "h = " << render_multivector_factored(d.h) << "\n";
  out << "omega_tilde = " << render_multivector(d.omega_tilde) << "\n";
  out << "idempotent: " << yes_no(d.h_report.is_idempotent) << "\n";
  out << "primitive: " << yes_no(d.h_report.is_primitive) << "\n";
  out << "ideal dimension: " << d.h_report.ideal_dim << "\n";
  out << "splitting sigma*(h) = P^Q(omega_tilde) ^ sigma*(e): "
      << (d.splitting_verified ? "confirmed" : "FAILED") << "\n";
  return out.str();
}

// ---- recover ------------------------------------------------------------

std::string render_integer_matrix(const RationalMatrix& m) {
  std::size_t width = 1;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      width = std::max(width, rational_str(m.at(r, c)).size());
    }
  }
  std::ostringstream out;
  for (int r = 0; r < m.rows(); ++r) {
    out << " ";
    for (int c = 0; c < m.cols(); ++c) {
      std::string cell = rational_str(m.at(r, c));
      out << " " << std::string(width - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json matrix_to_json_rows(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string run_recover(const Signature& sig, const std::string& idempotent_path,
                        const std::string& format) {
  Multivector f = parse_multivector(read_file(idempotent_path), sig);
  UnitaryStructure structure = recover_structure(sig, f);
  if (format == "json") {
    nlohmann::json j = report_header("recover", sig);
    j["n"] = structure.n;
    j["omega"] = multivector_to_json(structure.omega);
    j["J"] = matrix_to_json_rows(structure.J);
    return json_str(j);
  }
  std::ostringstream out;
  out << "signature: " << signature_str(sig) << "\n";
  out << "omega = " << render_multivector(structure.omega) << "\n";
  out << "J:\n" << render_integer_matrix(structure.J);
  return out.str();
}

// ---- verify -------------------------------------------------------------

std::string run_verify(const Signature& sig, const std::string& idempotent_path,
                       const std::string& format) {
  Multivector f = parse_multivector(read_file(idempotent_path), sig);
  IdempotentReport report = verify_idempotent(sig, f);
  if (format == "json") {
    nlohmann::json j = report_header("verify", sig);
    j["matrix_algebra"] = matrix_type_to_json(classify(sig));
    j["report"] = idempotent_report_to_json(report);
    return json_str(j);
  }
  std::ostringstream out;
  out << "signature: " << signature_str(sig) << "\n";
  out << "f = " << render_multivector_factored(f) << "\n";
  out << "idempotent: " << yes_no(report.is_idempotent) << "\n";
  out << "primitive: " << yes_no(report.is_primitive) << "\n";
  out << "ideal dimension: " << report.ideal_dim << "\n";
  out << "matrix algebra: " << classify(sig).str() << "\n";
  out << "division ring: "
      << (report.division_type ? division_type_str(*report.division_type) : "n/a") << "\n";
  return out.str();
}

// ---- kahler -------------------------------------------------------------

std::string run_kahler(int n, bool rational, const std::string& format) {
  Multivector poly = rational ? rational_kahler_polynomial(n) : kahler_polynomial(n);
  if (format == "json") {
    nlohmann::json j = report_header("kahler", poly.sig());
    j["n"] = n;
    j["rational"] = rational;
    j["polynomial"] = multivector_to_json(poly);
    return json_str(j);
  }
  return render_multivector(poly) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford algebra toolkit: primitive idempotents, spinor ideals, and "
               "Kahler-form structures"};
  app.require_subcommand(1);

  std::string sig_text;
  std::string structure_text;
  std::string generator_list;
  std::string idempotent_path;
  int kahler_n = 1;
  bool kahler_rational = false;
  CommonOptions classify_opts, ideal_opts, project_opts, recover_opts, verify_opts, kahler_opts;

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "Matrix algebra type of R_{p,q} and its ideal data");
  cmd_classify->add_option("--signature", sig_text, "Signature P,Q")->required();
  add_common(cmd_classify, classify_opts);

  CLI::App* cmd_ideal =
      app.add_subcommand("ideal", "Build an idempotent and list its minimal left ideal basis");
  cmd_ideal->add_option("--signature", sig_text, "Signature P,Q")->required();
  CLI::Option* structure_opt =
      cmd_ideal->add_option("--structure", structure_text, "Unitary structure, e.g. u3");
  CLI::Option* generators_opt = cmd_ideal->add_option(
      "--generators", generator_list, "Comma-separated commuting involutions, e.g. e13,e24");
  structure_opt->excludes(generators_opt);
  add_common(cmd_ideal, ideal_opts);

  CLI::App* cmd_project = app.add_subcommand(
      "project", "Recover a unitary structure by projection from a factored idempotent");
  cmd_project->add_option("--signature", sig_text, "Signature P,Q")->required();
  add_common(cmd_project, project_opts);

  CLI::App* cmd_recover =
      app.add_subcommand("recover", "Recover omega and J from an idempotent file");
  cmd_recover->add_option("--signature", sig_text, "Signature P,Q")->required();
  cmd_recover->add_option("--idempotent", idempotent_path, "Multivector file")->required();
  add_common(cmd_recover, recover_opts);

  CLI::App* cmd_verify = app.add_subcommand("verify", "Verify an idempotent from a file");
  cmd_verify->add_option("--signature", sig_text, "Signature P,Q")->required();
  cmd_verify->add_option("--idempotent", idempotent_path, "Multivector file")->required();
  add_common(cmd_verify, verify_opts);

  CLI::App* cmd_kahler = app.add_subcommand("kahler", "Print the Kahler polynomial for --n N");
  cmd_kahler->add_option("--n", kahler_n, "Complex dimension")->required();
  cmd_kahler->add_flag("--rational", kahler_rational, "Print the rational Kahler polynomial");
  add_common(cmd_kahler, kahler_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_classify->parsed()) {
      Signature sig = parse_signature(sig_text);
      emit(classify_opts, run_classify(sig, classify_opts.format));
    } else if (cmd_ideal->parsed()) {
      Signature sig = parse_signature(sig_text);
      std::optional<int> structure_n;
      if (!structure_text.empty()) {
        if (structure_text.size() < 2 || (structure_text[0] != 'u' && structure_text[0] != 'U') ||
            structure_text.find_first_not_of("0123456789", 1) != std::string::npos) {
          throw Error("structure must look like u3");
        }
        structure_n = std::stoi(structure_text.substr(1));
      } else if (generator_list.empty()) {
        throw Error("ideal requires --structure or --generators");
      }
      emit(ideal_opts, run_ideal(sig, structure_n, generator_list, ideal_opts.format));
    } else if (cmd_project->parsed()) {
      Signature sig = parse_signature(sig_text);
      emit(project_opts, run_project(sig, project_opts.format));
    } else if (cmd_recover->parsed()) {
      Signature sig = parse_signature(sig_text);
      emit(recover_opts, run_recover(sig, idempotent_path, recover_opts.format));
    } else if (cmd_verify->parsed()) {
      Signature sig = parse_signature(sig_text);
      emit(verify_opts, run_verify(sig, idempotent_path, verify_opts.format));
    } else if (cmd_kahler->parsed()) {
      emit(kahler_opts, run_kahler(kahler_n, kahler_rational, kahler_opts.format));
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
