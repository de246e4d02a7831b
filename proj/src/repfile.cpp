#include "strcg/repfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "strcg/errors.hpp"

namespace strcg {

namespace {

using nlohmann::json;

struct Line {
  int number;
  std::string key;
  std::string value;
};

std::vector<Line> key_value_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t start = raw.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t colon = raw.find(':');
    if (colon == std::string::npos || colon < start) {
      throw ParseError(lineno, "expected 'key: value'");
    }
    std::string key = raw.substr(start, colon - start);
    std::string value = raw.substr(colon + 1);
    std::size_t vs = value.find_first_not_of(" \t");
    std::size_t ve = value.find_last_not_of(" \t\r");
    value = vs == std::string::npos ? "" : value.substr(vs, ve - vs + 1);
    out.push_back({lineno, std::move(key), std::move(value)});
  }
  if (out.empty()) throw ParseError(1, "empty file");
  return out;
}

int parse_int(const Line& line, int min_value, const char* what) {
  std::istringstream vs(line.value);
  int v;
  std::string rest;
  if (!(vs >> v) || (vs >> rest) || v < min_value) {
    throw ParseError(line.number, std::string(what) + " must be an integer >= " +
                                      std::to_string(min_value));
  }
  return v;
}

RepFile parse_permutation_kind(const std::vector<Line>& lines) {
  if (lines.size() < 2 || lines[1].key != "degree") {
    throw ParseError(lines.size() > 1 ? lines[1].number : lines[0].number,
                     "expected 'degree:' after 'kind: permutation'");
  }
  int degree = parse_int(lines[1], 1, "degree");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (lines[i].key != "gen") {
      throw ParseError(lines[i].number, "unknown key '" + lines[i].key + "'");
    }
    try {
      gens.push_back(Permutation::from_cycles(degree, lines[i].value));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lines[i].number, e.what());
    }
  }
  RepFile out{RepFile::Kind::permutation, SggiRep(degree, std::move(gens)), {}, {}};
  return out;
}

// field: p  |  p^k  |  p^k modulus: c0,c1,...,ck
FieldPtr parse_field_line(const Line& line) {
  std::string v = line.value;
  std::vector<int> modulus;
  std::size_t mod_pos = v.find("modulus:");
  if (mod_pos != std::string::npos) {
    std::string coeffs = v.substr(mod_pos + 8);
    std::istringstream ms(coeffs);
    std::string tok;
    while (std::getline(ms, tok, ',')) {
      try {
        modulus.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError(line.number, "bad modulus coefficient '" + tok + "'");
      }
    }
    v = v.substr(0, mod_pos);
  }
  std::istringstream fs(v);
  std::string spec;
  fs >> spec;
  int p = 0, k = 1;
  std::size_t caret = spec.find('^');
  try {
    if (caret == std::string::npos) {
      p = std::stoi(spec);
    } else {
      p = std::stoi(spec.substr(0, caret));
      k = std::stoi(spec.substr(caret + 1));
    }
  } catch (const std::exception&) {
    throw ParseError(line.number, "bad field spec '" + spec + "' (expected p or p^k)");
  }
  try {
    if (!modulus.empty()) return FiniteField::extension(p, k, std::move(modulus));
    return FiniteField::extension(p, k);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line.number, e.what());
  }
}

Matrix parse_matrix_value(const Line& line, const FieldPtr& field, int dim) {
  json j;
  try {
    j = json::parse(line.value);
  } catch (const json::exception& e) {
    throw ParseError(line.number, std::string("bad matrix literal: ") + e.what());
  }
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ParseError(line.number, "matrix must have " + std::to_string(dim) + " rows");
  }
  Matrix m(field, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError(line.number, "row " + std::to_string(r) + " must have " +
                                        std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      const json& entry = row[c];
      if (entry.is_number_integer()) {
        m.set(r, c, field->from_int(entry.get<long long>()));
      } else if (entry.is_array()) {
        std::vector<int> coeffs;
        for (const json& x : entry) {
          if (!x.is_number_integer()) {
            throw ParseError(line.number, "coefficient lists must contain integers");
          }
          coeffs.push_back(x.get<int>());
        }
        try {
          m.set(r, c, field->from_coeffs(coeffs));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line.number, e.what());
        }
      } else {
        throw ParseError(line.number, "entries must be integers or coefficient lists");
      }
    }
  }
  return m;
}

RepFile parse_matrix_kind(const std::vector<Line>& lines) {
  if (lines.size() < 3 || lines[1].key != "field" || lines[2].key != "dim") {
    throw ParseError(lines[0].number,
                     "matrix kind needs 'field:' then 'dim:' after the kind line");
  }
  FieldPtr field = parse_field_line(lines[1]);
  int dim = parse_int(lines[2], 1, "dim");

  std::optional<BilinearForm> form;
  std::vector<Matrix> gens;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    if (lines[i].key == "form") {
      if (form) throw ParseError(lines[i].number, "duplicate 'form:' line");
      if (!gens.empty()) throw ParseError(lines[i].number, "'form:' must precede generators");
      try {
        form = BilinearForm(parse_matrix_value(lines[i], field, dim));
      } catch (const std::invalid_argument& e) {
        throw ParseError(lines[i].number, e.what());
      }
    } else if (lines[i].key == "gen") {
      gens.push_back(parse_matrix_value(lines[i], field, dim));
    } else {
      throw ParseError(lines[i].number, "unknown key '" + lines[i].key + "'");
    }
  }
  if (gens.empty()) throw ParseError(lines.back().number, "matrix kind needs at least one 'gen:'");
  RepFile out{RepFile::Kind::matrix, SggiRep(std::move(gens)), std::move(form), {}};
  return out;
}

std::string field_line(const FiniteField& f) {
  std::string out = "field: " + f.name();
  if (f.degree() > 1) {
    out += " modulus: ";
    const auto& m = f.modulus();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace

RepFile parse_rep_file(const std::string& text) {
  std::vector<Line> lines = key_value_lines(text);
  if (lines[0].key != "kind") throw ParseError(lines[0].number, "first line must be 'kind:'");
  std::istringstream ks(lines[0].value);
  std::string kind;
  ks >> kind;
  if (kind == "permutation") return parse_permutation_kind(lines);
  if (kind == "matrix") return parse_matrix_kind(lines);
  if (kind == "cpr") {
    RepFile out{RepFile::Kind::cpr, {}, {}, cpr_parse(text)};
    return out;
  }
  throw ParseError(lines[0].number,
                   "unknown kind '" + kind + "' (expected permutation, matrix, or cpr)");
}

std::string emit_rep_file(const RepFile& file) {
  switch (file.kind) {
    case RepFile::Kind::permutation: {
      const SggiRep& rep = *file.rep;
      std::string out = "kind: permutation\n";
      out += "degree: " + std::to_string(rep.degree()) + "\n";
      for (int i = 0; i < rep.rank(); ++i) {
        out += "gen: " + rep.perm_gens()[i].cycle_string() + "\n";
      }
      return out;
    }
    case RepFile::Kind::matrix: {
      const SggiRep& rep = *file.rep;
      std::string out = "kind: matrix\n";
      out += field_line(*rep.field()) + "\n";
      out += "dim: " + std::to_string(rep.dim()) + "\n";
      if (file.form) out += "form: " + file.form->gram().to_string() + "\n";
      for (const Matrix& g : rep.matrix_gens()) {
        out += "gen: " + g.to_string() + "\n";
      }
      return out;
    }
    case RepFile::Kind::cpr:
      return cpr_emit(*file.graph);
  }
  throw std::logic_error("unreachable");
}

RepFile load_rep_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rep_file(buf.str());
}

void save_rep_file(const RepFile& file, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << emit_rep_file(file);
}

SggiRep rep_of(const RepFile& file) {
  if (file.kind == RepFile::Kind::cpr) return cpr_to_rep(*file.graph);
  return *file.rep;
}

RepFile to_rep_file(const SggiRep& rep) {
  if (rep.engine() == SggiRep::Engine::permutation) {
    return RepFile{RepFile::Kind::permutation, rep, {}, {}};
  }
  return RepFile{RepFile::Kind::matrix, rep, {}, {}};
}

}  // namespace strcg
