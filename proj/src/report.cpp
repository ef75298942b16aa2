#include "gfderiv/report.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "gfderiv/int_deriv.hpp"
#include "gfderiv/operator_matrix.hpp"

namespace gfderiv {

namespace {

using json = nlohmann::ordered_json;

json log_to_json(const DiscreteLog& n) {
  if (n.is_neg_infinity()) return "-inf";
  return n.exponent();
}

DiscreteLog log_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "-inf") throw Error(ErrorKind::ParseError, "exponent strings must be \"-inf\"");
    return DiscreteLog::neg_infinity();
  }
  return DiscreteLog(j.get<std::uint32_t>());
}

std::string join_columns(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += " | ";
    line += cells[i];
    if (i + 1 < cells.size()) line.append(widths[i] - cells[i].size(), ' ');
  }
  return line;
}

std::string aligned(const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> widths;
  for (const auto& row : table) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : table) out += join_columns(row, widths) + '\n';
  return out;
}

template <typename T>
std::string list_to_string(const std::vector<T>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << '}';
  return out.str();
}

}  // namespace

std::vector<DerivTableRow> derivative_table(const FieldCtx& ctx, const std::vector<Deformation>& deformations) {
  std::vector<DerivTableRow> rows;
  rows.reserve(ctx.order());
  for (const auto& f : ctx.elements()) {
    DerivTableRow row{.n = f.dlog(), .element = f.to_string(), .derivs = {}};
    for (const auto& d : deformations) row.derivs.emplace_back(d.label(), derivative(f, d).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table(const std::vector<DerivTableRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"n", "theta^n"};
  if (!rows.empty()) {
    for (const auto& [label, _] : rows.front().derivs) header.push_back(label);
  }
  cells.push_back(std::move(header));
  for (const auto& row : rows) {
    std::vector<std::string> line{row.n.to_string(), row.element};
    for (const auto& [_, value] : row.derivs) line.push_back(value);
    cells.push_back(std::move(line));
  }
  return aligned(cells);
}

AtlasEntry classify(const Deformation& d) {
  d.require_frobenius("classify");
  const auto op = operator_matrix(d);

  AtlasEntry entry;
  entry.field = d.ctx().spec_string();
  entry.deformation = d.spec_string();
  for (const auto& c : constants(d)) entry.constants.push_back(c.dlog());
  entry.exp_solutions = find_exp(d);
  for (const auto& [f, period] : classify_trig(d)) entry.trig_periods.push_back({f.dlog().exponent(), period});
  std::sort(entry.trig_periods.begin(), entry.trig_periods.end(),
            [](const TrigPeriod& a, const TrigPeriod& b) { return a.exponent < b.exponent; });
  for (const auto& b : op.nilpotent_basis) entry.nilpotent_basis.push_back(b.dlog().exponent());
  std::sort(entry.nilpotent_basis.begin(), entry.nilpotent_basis.end());
  entry.kernel_dim = static_cast<std::uint32_t>(op.kernel_basis.size());
  entry.image_size = 1;
  for (std::size_t i = 0; i < op.image_basis.size(); ++i) entry.image_size *= d.ctx().characteristic();
  entry.generalized_kernel_dim = static_cast<std::uint32_t>(op.generalized_kernel_basis.size());
  return entry;
}

std::string render_report(const AtlasEntry& entry) {
  auto theta_list = [](const auto& exps) {
    std::vector<std::string> out;
    for (const auto& e : exps) out.push_back("theta^" + std::to_string(e));
    return out;
  };
  std::vector<std::string> constants;
  for (const auto& c : entry.constants) constants.push_back(c.is_neg_infinity() ? "0" : "theta^" + c.to_string());
  std::vector<std::string> periods;
  for (const auto& t : entry.trig_periods) periods.push_back("theta^" + std::to_string(t.exponent) + ":" + std::to_string(t.period));

  std::ostringstream out;
  out << "field: " << entry.field << '\n';
  out << "deformation: " << entry.deformation << '\n';
  out << "constants: " << list_to_string(constants) << '\n';
  out << "exp solutions: " << list_to_string(theta_list(entry.exp_solutions)) << '\n';
  out << "trig periods: " << list_to_string(periods) << '\n';
  out << "nilpotent basis: " << list_to_string(theta_list(entry.nilpotent_basis)) << '\n';
  out << "kernel dimension: " << entry.kernel_dim << '\n';
  out << "generalized kernel dimension: " << entry.generalized_kernel_dim << '\n';
  out << "elements with an antiderivative: " << entry.image_size << '\n';
  return out.str();
}

json to_json(const DerivTableRow& row) {
  json derivs = json::object();
  for (const auto& [label, value] : row.derivs) derivs[label] = value;
  return json{{"n", log_to_json(row.n)}, {"element", row.element}, {"derivs", std::move(derivs)}};
}

json to_json(const std::vector<DerivTableRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back(to_json(row));
  return out;
}

json to_json(const AtlasEntry& entry) {
  json constants = json::array();
  for (const auto& c : entry.constants) constants.push_back(log_to_json(c));
  json periods = json::array();
  for (const auto& t : entry.trig_periods) periods.push_back(json{{"exponent", t.exponent}, {"period", t.period}});
  return json{
      {"schema", kSchemaVersion},
      {"field", entry.field},
      {"deformation", entry.deformation},
      {"constants", std::move(constants)},
      {"exp_solutions", entry.exp_solutions},
      {"trig_periods", std::move(periods)},
      {"nilpotent_basis", entry.nilpotent_basis},
      {"kernel_dim", entry.kernel_dim},
      {"image_size", entry.image_size},
      {"generalized_kernel_dim", entry.generalized_kernel_dim},
  };
}

AtlasEntry atlas_entry_from_json(const json& j) {
  try {
    if (j.at("schema").get<int>() != kSchemaVersion) throw Error(ErrorKind::ParseError, "unsupported schema version");
    AtlasEntry entry;
    entry.field = j.at("field").get<std::string>();
    entry.deformation = j.at("deformation").get<std::string>();
    for (const auto& c : j.at("constants")) entry.constants.push_back(log_from_json(c));
    entry.exp_solutions = j.at("exp_solutions").get<std::vector<std::uint32_t>>();
    for (const auto& t : j.at("trig_periods")) entry.trig_periods.push_back({t.at("exponent").get<std::uint32_t>(), t.at("period").get<std::uint32_t>()});
    entry.nilpotent_basis = j.at("nilpotent_basis").get<std::vector<std::uint32_t>>();
    entry.kernel_dim = j.at("kernel_dim").get<std::uint32_t>();
    entry.image_size = j.at("image_size").get<std::uint64_t>();
    entry.generalized_kernel_dim = j.at("generalized_kernel_dim").get<std::uint32_t>();
    return entry;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed atlas entry: ") + e.what());
  }
}

std::vector<AtlasEntry> build_atlas(std::uint64_t max_order) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fields;
  for (std::uint64_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t order = p * p;
    for (std::uint32_t k = 2; order <= max_order; ++k, order *= p) fields.emplace_back(static_cast<std::uint32_t>(p), k);
  }

  auto classify_field = [max_order](std::uint32_t p, std::uint32_t k) {
    const auto ctx = FieldCtx::make(p, k, std::nullopt, max_order);
    std::vector<AtlasEntry> entries;
    for (std::uint32_t j = 1; j < k; ++j) entries.push_back(classify(Deformation::frobenius_power(ctx, j)));
    return entries;
  };

  // Fields are independent; run them in waves no wider than the machine.
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<AtlasEntry> out;
  for (std::size_t begin = 0; begin < fields.size(); begin += width) {
    std::vector<std::future<std::vector<AtlasEntry>>> wave;
    for (std::size_t i = begin; i < std::min(fields.size(), begin + width); ++i) {
      wave.push_back(std::async(std::launch::async, classify_field, fields[i].first, fields[i].second));
    }
    for (auto& job : wave) {
      auto entries = job.get();
      out.insert(out.end(), std::make_move_iterator(entries.begin()), std::make_move_iterator(entries.end()));
    }
  }
  return out;
}

std::vector<AtlasEntry> write_atlas(std::uint64_t max_order, const std::filesystem::path& out) {
  const auto entries = build_atlas(max_order);
  {
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorKind::IoError, "cannot open " + out.string() + " for writing");
    for (const auto& entry : entries) file << to_json(entry).dump() << '\n';
    file.flush();
    if (!file) {
      file.close();
      std::error_code ignored;
      std::filesystem::remove(out, ignored);
      throw Error(ErrorKind::IoError, "failed while writing " + out.string());
    }
  }
  return entries;
}

std::string render_intderiv_table(std::uint64_t a, std::uint64_t b) {
  if (a > b) throw Error(ErrorKind::InvalidArgument, "empty range " + std::to_string(a) + ".." + std::to_string(b));
  std::vector<std::vector<std::string>> cells{{"n", "D(n)"}};
  for (std::uint64_t n = a;; ++n) {
    cells.push_back({std::to_string(n), std::to_string(arith_derivative(n))});
    if (n == b) break;
  }
  return aligned(cells);
}

}  // namespace gfderiv
