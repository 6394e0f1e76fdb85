#include "nlie/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nlie {

using json = nlohmann::ordered_json;

namespace {

ParseError err(const std::string& what) { return ParseError(what); }

std::string tuple_names(const std::vector<std::string>& args) {
  std::string s = "[";
  for (std::size_t i = 0; i < args.size(); i++) {
    if (i) s += ",";
    s += args[i];
  }
  return s + "]";
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw err(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t uint_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned())
    throw err(std::string("field '") + name + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

// Exact scalars only: a quoted "p/q" (or "p") string, or a plain JSON
// integer. Decimals are rejected outright rather than rounded.
Rat rational_field(const json& v, const std::string& where) {
  if (v.is_number_integer() && !v.is_number_float())
    return Rat(v.get<long>());
  if (!v.is_string())
    throw err("expected a rational string like \"3/4\" " + where);
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw err(std::string(e.what()) + " " + where);
  }
}

}  // namespace

NLieAlgebra AlgebraFile::algebra() const {
  return NLieAlgebra(n, dim, basis, brackets);
}

std::optional<BilinearForm> AlgebraFile::bilinear_form() const {
  if (!form) return std::nullopt;
  return BilinearForm{*form};
}

AlgebraFile snapshot(const NLieAlgebra& a, const BilinearForm* form) {
  AlgebraFile f;
  f.n = a.arity();
  f.dim = a.dim();
  f.basis = a.basis_names();
  f.brackets = a.constants();
  if (form) f.form = form->gram;
  return f;
}

std::string emit(const AlgebraFile& f) {
  json j;
  j["n"] = f.n;
  j["dim"] = f.dim;
  j["basis"] = f.basis;
  json brs = json::array();
  for (const auto& [tuple, value] : f.brackets) {
    json args = json::array();
    for (std::size_t i : tuple) args.push_back(f.basis.at(i));
    json val = json::object();
    for (std::size_t i = 0; i < value.size(); i++)
      if (!value[i].is_zero()) val[f.basis.at(i)] = value[i].str();
    if (val.empty()) continue;
    brs.push_back(json{{"args", std::move(args)}, {"value", std::move(val)}});
  }
  j["brackets"] = std::move(brs);
  if (f.form) {
    json rows = json::array();
    for (std::size_t r = 0; r < f.form->rows(); r++) {
      json row = json::array();
      for (std::size_t c = 0; c < f.form->cols(); c++)
        row.push_back(f.form->at(r, c).str());
      rows.push_back(std::move(row));
    }
    j["form"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

AlgebraFile parse_algebra_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw err(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw err("top level must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "n" && key != "dim" && key != "basis" && key != "brackets" &&
        key != "form")
      throw err("unknown field '" + key + "'");

  AlgebraFile f;
  f.n = uint_field(j, "n");
  if (f.n < 2) throw err("n must be at least 2");
  f.dim = uint_field(j, "dim");
  if (f.dim < 1) throw err("dim must be at least 1");

  const json& basis = field(j, "basis");
  if (!basis.is_array() || basis.size() != f.dim)
    throw err("basis must list exactly dim names");
  std::map<std::string, std::size_t> index_of;
  for (const auto& b : basis) {
    if (!b.is_string() || b.get<std::string>().empty())
      throw err("basis names must be nonempty strings");
    std::string name = b.get<std::string>();
    if (!index_of.emplace(name, f.basis.size()).second)
      throw err("duplicate basis name '" + name + "'");
    f.basis.push_back(std::move(name));
  }
  auto resolve = [&](const json& v, const std::string& where) -> std::size_t {
    if (!v.is_string()) throw err("expected a basis name " + where);
    auto it = index_of.find(v.get<std::string>());
    if (it == index_of.end())
      throw err("unknown basis name '" + v.get<std::string>() + "' " + where);
    return it->second;
  };

  const json& brs = field(j, "brackets");
  if (!brs.is_array()) throw err("brackets must be an array");
  for (const auto& br : brs) {
    if (!br.is_object()) throw err("each bracket must be an object");
    for (const auto& [key, _] : br.items())
      if (key != "args" && key != "value")
        throw err("unknown bracket field '" + key + "'");
    const json& args = field(br, "args");
    if (!args.is_array() || args.size() != f.n)
      throw err("args must list exactly n basis names");
    std::vector<std::string> arg_names;
    IndexTuple tuple;
    for (const auto& aj : args) {
      tuple.push_back(resolve(aj, "in args"));
      arg_names.push_back(f.basis[tuple.back()]);
    }
    for (std::size_t i = 1; i < tuple.size(); i++)
      if (tuple[i - 1] >= tuple[i])
        throw err("non-increasing tuple " + tuple_names(arg_names));
    if (f.brackets.count(tuple))
      throw err("duplicate bracket tuple " + tuple_names(arg_names));
    const json& val = field(br, "value");
    if (!val.is_object())
      throw err("value of " + tuple_names(arg_names) + " must be an object");
    Vec vec(f.dim, Rat(0));
    for (const auto& [key, entry] : val.items()) {
      auto it = index_of.find(key);
      if (it == index_of.end())
        throw err("unknown basis name '" + key + "' in value of " +
                  tuple_names(arg_names));
      if (!vec[it->second].is_zero())
        throw err("duplicate value key '" + key + "' in " +
                  tuple_names(arg_names));
      vec[it->second] =
          rational_field(entry, "in value of " + tuple_names(arg_names));
    }
    if (!std::all_of(vec.begin(), vec.end(),
                     [](const Rat& r) { return r.is_zero(); }))
      f.brackets.emplace(std::move(tuple), std::move(vec));
  }

  if (auto it = j.find("form"); it != j.end()) {
    const json& rows = *it;
    if (!rows.is_array() || rows.size() != f.dim)
      throw err("form must be a dim x dim array");
    Matrix g(f.dim, f.dim);
    for (std::size_t r = 0; r < f.dim; r++) {
      const json& row = rows[r];
      if (!row.is_array() || row.size() != f.dim)
        throw err("form must be a dim x dim array");
      for (std::size_t c = 0; c < f.dim; c++)
        g.at(r, c) = rational_field(
            row[c], "in form row " + std::to_string(r + 1));
    }
    f.form = std::move(g);
  }
  return f;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw err("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

}  // namespace nlie
