#include "kcomm_cli/commands.hpp"

#include <functional>
#include <map>

#include "kcomm/oracle.hpp"

namespace kcomm::cli {

using json = nlohmann::ordered_json;

namespace {

std::string render_class(const GrothendieckClass& c) { return c.is_zero() ? "0" : c.to_string(); }

std::string render_rows(const Field& k, std::size_t len, const std::vector<Vector>& rows) {
  if (rows.empty()) return "[[]]";
  Matrix m(k, rows.size(), len);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < len; ++j) m(i, j) = rows[i][j];
  return m.to_string();
}

json header(const Field& k, std::size_t nvars, std::size_t dim) {
  return json{{"field", k.name()}, {"nvars", nvars}, {"dim", dim}};
}

json class_entries(const GrothendieckClass& c) {
  json arr = json::array();
  for (const auto& [key, mult] : c.support()) {
    arr.push_back({{"generators", key.ideal().generator_strings()},
                   {"degree", key.residue_degree()},
                   {"multiplicity", mult}});
  }
  return arr;
}

json tilde_json(const TildeClass& t) {
  return {{"numerator", ascending_string(t.numerator())},
          {"denominator", ascending_string(t.denominator())},
          {"text", t.to_string()}};
}

const CommutingTuple& require_tuple(const JobDescription& job, std::string_view command) {
  if (!job.tuple) throw UsageError(std::string(command) + " needs `vars`, `dim` and matrix lines");
  return *job.tuple;
}

const CommutingTuple& require_single(const JobDescription& job, std::string_view command) {
  const CommutingTuple& t = require_tuple(job, command);
  if (t.nvars() != 1) {
    throw UsageError(std::string(command) + " needs exactly one matrix (vars 1), got " + std::to_string(t.nvars()));
  }
  return t;
}

std::vector<TildeClass> require_tildes(const JobDescription& job, std::string_view command) {
  if (job.tildes.empty()) throw UsageError(std::string(command) + " needs at least one `tilde` line");
  std::vector<TildeClass> out;
  for (const auto& [num, den] : job.tildes) {
    try {
      out.emplace_back(num, den);
    } catch (const PolyError& e) {
      throw UsageError(std::string("tilde classes need constant terms: ") + e.what());
    }
  }
  return out;
}

struct Context {
  const JobDescription& job;
  const RunOptions& options;
  Rng rng;
};

CommandResult finish(const Context& ctx, const std::string& text, const json& j, int code = kSuccess) {
  return {ctx.options.json ? j.dump(2) + "\n" : text + "\n", code};
}

CommandResult cmd_class(Context& ctx) {
  const CommutingTuple& t = require_tuple(ctx.job, "class");
  const GrothendieckClass c = k0_class(t, ctx.rng);
  return finish(ctx, render_class(c), class_to_json(c, t.dim()));
}

CommandResult cmd_charpoly(Context& ctx) {
  const CommutingTuple& t = require_tuple(ctx.job, "charpoly");
  json j = header(t.field(), t.nvars(), t.dim());
  j["matrices"] = json::array();
  std::string text;
  for (std::size_t i = 0; i < t.nvars(); ++i) {
    const UniPoly c = charpoly(t.mat(i));
    const UniPoly m = minimal_polynomial(t.mat(i));
    const UniPoly l = lambda_t(t.mat(i));
    const std::string prefix = t.nvars() == 1 ? "" : variable_name(t.nvars(), i) + " ";
    if (!text.empty()) text += '\n';
    text += prefix + "charpoly " + c.to_string() + '\n' + prefix + "minpoly " + m.to_string() + '\n' + prefix +
            "lambda_t " + ascending_string(l);
    j["matrices"].push_back({{"variable", variable_name(t.nvars(), i)},
                             {"charpoly", c.to_string()},
                             {"minpoly", m.to_string()},
                             {"lambda_t", ascending_string(l)}});
  }
  return finish(ctx, text, j);
}

CommandResult cmd_split(Context& ctx) {
  const CommutingTuple& t = require_single(ctx.job, "split");
  const KelleySpanierSplit s = kelley_spanier_split(t);
  const GrothendieckClass c = k0_class(t, ctx.rng);
  const KelleySpanierSplit image = comparison_image(c);
  const bool consistent = image == s;
  std::string text = "rank " + std::to_string(s.rank) + "\ntilde " + s.tilde.to_string();
  if (!consistent) {
    text += "\nmismatch: class maps to rank " + std::to_string(image.rank) + ", tilde " + image.tilde.to_string();
  }
  json j = header(t.field(), t.nvars(), t.dim());
  j["rank"] = s.rank;
  j["tilde"] = tilde_json(s.tilde);
  j["class"] = class_entries(c);
  j["consistent"] = consistent;
  return finish(ctx, text, j, consistent ? kSuccess : kVerificationFailure);
}

CommandResult cmd_decompose(Context& ctx) {
  const CommutingTuple& t = require_tuple(ctx.job, "decompose");
  json j = header(t.field(), t.nvars(), t.dim());
  j["components"] = json::array();
  std::string text;
  for (const auto& comp : primary_decomposition(t, ctx.rng)) {
    const std::size_t dim = comp.submodule.dim();
    const std::size_t mult = dim / comp.key.residue_degree();
    const std::string basis = render_rows(t.field(), t.dim(), comp.submodule.space().basis());
    if (!text.empty()) text += '\n';
    text += comp.key.to_string() + " dim " + std::to_string(dim) + " multiplicity " + std::to_string(mult) +
            " basis " + basis;
    j["components"].push_back({{"generators", comp.key.ideal().generator_strings()},
                               {"degree", comp.key.residue_degree()},
                               {"dim", dim},
                               {"multiplicity", mult},
                               {"basis", basis}});
  }
  if (text.empty()) text = "0";
  return finish(ctx, text, j);
}

CommandResult cmd_radical(Context& ctx) {
  const CommutingTuple& t = require_tuple(ctx.job, "radical");
  const InvariantSubmodule rad = radical_submodule(t);
  const std::string basis = render_rows(t.field(), t.dim(), rad.space().basis());
  std::vector<std::size_t> layers;
  for (const auto& layer : radical_filtration(t)) layers.push_back(layer.dim());
  std::string text = "radical dim " + std::to_string(rad.dim()) + " basis " + basis + "\nlayers";
  for (auto d : layers) text += " " + std::to_string(d);
  json j = header(t.field(), t.nvars(), t.dim());
  j["radical"] = {{"dim", rad.dim()}, {"basis", basis}};
  j["layers"] = layers;
  return finish(ctx, text, j);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

CommandResult cmd_annihilator(Context& ctx) {
  const CommutingTuple& t = require_tuple(ctx.job, "annihilator");
  const Ideal ann = annihilator_ideal(t);
  std::vector<std::string> standard;
  for (const auto& m : ann.standard_monomials()) standard.push_back(m.to_string());
  json j = header(t.field(), t.nvars(), t.dim());
  j["generators"] = ann.generator_strings();
  j["standard_monomials"] = standard;
  return finish(ctx, "generators " + join(ann.generator_strings()) + "\nstandard " + join(standard), j);
}

CommandResult cmd_verify_additivity(Context& ctx) {
  const CommutingTuple& t = require_tuple(ctx.job, "verify-additivity");
  std::vector<InvariantSubmodule> subs;
  if (ctx.job.has_span) {
    subs.push_back(generated_submodule(t, ctx.job.span));
  } else {
    for (std::size_t i = 0; i < t.dim(); ++i) subs.push_back(generated_submodule(t, {unit_vector(t.field(), t.dim(), i)}));
  }
  const GrothendieckClass whole = k0_class(t, ctx.rng);
  bool all = true;
  std::string text;
  json j = header(t.field(), t.nvars(), t.dim());
  j["class"] = class_entries(whole);
  j["submodules"] = json::array();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const GrothendieckClass sub = k0_class(restrict_to(t, subs[i]), ctx.rng);
    const GrothendieckClass quo = k0_class(quotient_by(t, subs[i]), ctx.rng);
    const bool holds = sub + quo == whole;
    all = all && holds;
    text += "submodule " + std::to_string(i + 1) + " dim " + std::to_string(subs[i].dim()) + ": " +
            (holds ? "ok" : "FAILED") + '\n';
    j["submodules"].push_back({{"dim", subs[i].dim()},
                               {"basis", render_rows(t.field(), t.dim(), subs[i].space().basis())},
                               {"submodule_class", class_entries(sub)},
                               {"quotient_class", class_entries(quo)},
                               {"holds", holds}});
  }
  text += all ? "additivity holds" : "additivity FAILED";
  j["holds"] = all;
  return finish(ctx, text, j, all ? kSuccess : kVerificationFailure);
}

CommandResult cmd_tilde_mul(Context& ctx) {
  const std::vector<TildeClass> ts = require_tildes(ctx.job, "tilde-mul");
  TildeClass product(ctx.job.field);
  for (const auto& t : ts) product = product * t;
  json j{{"field", ctx.job.field.name()}, {"product", tilde_json(product)}};
  return finish(ctx, product.to_string(), j);
}

CommandResult cmd_tilde_map(Context& ctx) {
  const std::vector<TildeClass> ts = require_tildes(ctx.job, "tilde-map");
  std::string text;
  bool all = true;
  json j{{"field", ctx.job.field.name()}, {"nvars", 1}, {"maps", json::array()}};
  for (const auto& t : ts) {
    const GrothendieckClass v = tilde_to_free_abelian(t, ctx.rng);
    const bool round_trip = free_abelian_to_tilde(v) == t;
    all = all && round_trip;
    if (!text.empty()) text += '\n';
    text += "tilde " + t.to_string() + '\n' + render_class(v);
    if (!round_trip) text += "\nround trip FAILED";
    j["maps"].push_back({{"tilde", tilde_json(t)}, {"class", class_entries(v)}, {"round_trip", round_trip}});
  }
  return finish(ctx, text, j, all ? kSuccess : kVerificationFailure);
}

CommandResult cmd_oracle_check(Context& ctx) {
  const CommutingTuple& t = require_tuple(ctx.job, "oracle-check");
  GrothendieckClass expected(t.field(), t.nvars());
  try {
    expected = oracle::k0_class_oracle(t);
  } catch (const oracle::BoundExceeded& e) {
    throw UsageError(std::string("oracle-check: ") + e.what());
  }
  const GrothendieckClass got = k0_class(t, ctx.rng);
  const bool agree = got == expected;
  const std::string text =
      "decomposition:\n" + render_class(got) + "\noracle:\n" + render_class(expected) + '\n' + (agree ? "agree" : "MISMATCH");
  json j = class_to_json(got, t.dim());
  j["oracle_class"] = class_entries(expected);
  j["agree"] = agree;
  return finish(ctx, text, j, agree ? kSuccess : kVerificationFailure);
}

using Handler = std::function<CommandResult(Context&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table = {
      {"class", cmd_class},
      {"charpoly", cmd_charpoly},
      {"split", cmd_split},
      {"decompose", cmd_decompose},
      {"radical", cmd_radical},
      {"annihilator", cmd_annihilator},
      {"verify-additivity", cmd_verify_additivity},
      {"tilde-mul", cmd_tilde_mul},
      {"tilde-map", cmd_tilde_map},
      {"oracle-check", cmd_oracle_check},
  };
  return table;
}

Field field_from_name(const std::string& name) {
  if (name == "Q") return Field::rationals();
  if (name.rfind("F ", 0) == 0) return Field::prime(std::stoull(name.substr(2)));
  throw UsageError("unknown field name '" + name + "'");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "class", "charpoly", "split", "decompose", "radical", "annihilator", "verify-additivity", "tilde-mul", "tilde-map",
      "oracle-check"};
  return names;
}

CommandResult run_command(std::string_view command, const JobDescription& job, const RunOptions& options) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw UsageError("unknown command '" + std::string(command) + "'");
  Context ctx{job, options, Rng(options.seed)};
  return it->second(ctx);
}

json class_to_json(const GrothendieckClass& c, std::size_t dim) {
  json j = header(c.field(), c.nvars(), dim);
  j["class"] = class_entries(c);
  return j;
}

GrothendieckClass class_from_json(const json& j) {
  const Field k = field_from_name(j.at("field").get<std::string>());
  const auto nvars = j.at("nvars").get<std::size_t>();
  GrothendieckClass c(k, nvars);
  for (const auto& entry : j.at("class")) {
    std::vector<MultiPoly> gens;
    for (const auto& g : entry.at("generators")) gens.push_back(parse_polynomial(g.get<std::string>(), k, nvars));
    MaximalIdealKey key(Ideal::from_reduced_basis(k, nvars, std::move(gens)));
    if (key.residue_degree() != entry.at("degree").get<std::size_t>()) {
      throw UsageError("key " + key.to_string() + " has residue degree " + std::to_string(key.residue_degree()));
    }
    c.add(key, entry.at("multiplicity").get<long long>());
  }
  return c;
}

}  // namespace kcomm::cli
