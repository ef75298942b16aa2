// Command-line front end: derivative tables, classification reports, the
// small-field atlas and the integer arithmetic derivative.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gfderiv/int_deriv.hpp"
#include "gfderiv/report.hpp"
#include "gfderiv/spec_parse.hpp"

namespace {

constexpr const char* kBoundEnv = "GFDERIV_MAX_FIELD_ORDER";

std::uint64_t field_bound() {
  const char* raw = std::getenv(kBoundEnv);
  if (raw == nullptr || *raw == '\0') return gfderiv::kDefaultMaxFieldOrder;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used != std::string(raw).size() || value < 2) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw gfderiv::Error(gfderiv::ErrorKind::ParseError, std::string(kBoundEnv) + " must be an integer >= 2");
  }
}

void print_intderiv(const std::string& arg) {
  const auto dots = arg.find("..");
  auto parse = [](const std::string& s) {
    std::size_t used = 0;
    if (s.empty() || s.front() == '-') throw gfderiv::Error(gfderiv::ErrorKind::OutOfRange, "'" + s + "' is not a positive integer");
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      throw gfderiv::Error(gfderiv::ErrorKind::OutOfRange, "'" + s + "' is not a positive integer within 64 bits");
    }
    if (used != s.size()) throw gfderiv::Error(gfderiv::ErrorKind::ParseError, "'" + s + "' is not an integer");
    return static_cast<std::uint64_t>(v);
  };
  if (dots == std::string::npos) {
    const auto n = parse(arg);
    std::cout << "D(" << n << ") = " << gfderiv::arith_derivative(n) << '\n';
  } else {
    std::cout << gfderiv::render_intderiv_table(parse(arg.substr(0, dots)), parse(arg.substr(dots + 2)));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed number derivatives on finite fields and the integer arithmetic derivative"};
  app.require_subcommand(1);

  std::string field_spec;
  std::vector<std::string> q_specs;
  bool as_json = false;

  auto* table = app.add_subcommand("table", "Derivative of every field element under each deformation");
  table->add_option("--field", field_spec, "Field, e.g. p=2,k=4,poly=x^4+x+1")->required();
  table->add_option("--q", q_specs, "Deformation, e.g. q=x^7 or s=8 (repeatable)")->required();
  table->add_flag("--json", as_json, "Emit a JSON array of rows");

  std::string report_q;
  auto* report = app.add_subcommand("report", "Classification report for a Frobenius deformation");
  report->add_option("--field", field_spec, "Field spec")->required();
  report->add_option("--q", report_q, "Deformation spec")->required();
  report->add_flag("--json", as_json, "Emit the report as JSON");

  std::uint64_t atlas_max = 0;
  std::string atlas_out;
  auto* atlas = app.add_subcommand("atlas", "Classify every extension field up to a given order");
  atlas->add_option("--max", atlas_max, "Largest field order")->required();
  atlas->add_option("--out", atlas_out, "Output path (newline-delimited JSON)")->required();

  std::string int_arg;
  auto* intderiv = app.add_subcommand("intderiv", "Arithmetic derivative of n or of every n in a..b");
  intderiv->add_option("n", int_arg, "n or a..b")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto bound = field_bound();
    if (table->parsed()) {
      const auto ctx = gfderiv::parse_field(field_spec, bound);
      std::vector<gfderiv::Deformation> deformations;
      for (const auto& q : q_specs) deformations.push_back(gfderiv::parse_deformation(q, ctx));
      const auto rows = gfderiv::derivative_table(ctx, deformations);
      if (as_json) {
        std::cout << gfderiv::to_json(rows).dump(2) << '\n';
      } else {
        std::cout << gfderiv::render_table(rows);
      }
    } else if (report->parsed()) {
      const auto ctx = gfderiv::parse_field(field_spec, bound);
      const auto entry = gfderiv::classify(gfderiv::parse_deformation(report_q, ctx));
      if (as_json) {
        std::cout << gfderiv::to_json(entry).dump(2) << '\n';
      } else {
        std::cout << gfderiv::render_report(entry);
      }
    } else if (atlas->parsed()) {
      if (atlas_max > bound) {
        throw gfderiv::Error(gfderiv::ErrorKind::FieldTooLarge,
                             "--max " + std::to_string(atlas_max) + " exceeds the field bound " + std::to_string(bound) + " (set " + kBoundEnv + ")");
      }
      const auto entries = gfderiv::write_atlas(atlas_max, atlas_out);
      std::cerr << "wrote " << entries.size() << " entries to " << atlas_out << '\n';
    } else if (intderiv->parsed()) {
      print_intderiv(int_arg);
    }
  } catch (const gfderiv::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
