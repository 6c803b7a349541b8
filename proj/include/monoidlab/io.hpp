// JSON serialization for monoids and reports, and the `sw:` CLI shorthand.
//
// Monoid JSON:
//   { "size": n, "identity": i, "zero": j|null,
//     "table": [[...], ...], "labels": ["1","x",...,"0"]|null }

#ifndef MONOIDLAB_IO_HPP_
#define MONOIDLAB_IO_HPP_

#include <fstream>
#include <string>

#include <json.hpp>

#include "monoid.hpp"
#include "word.hpp"

namespace monoidlab {

using nlohmann::json;

inline json monoid_to_json(FiniteMonoid const& M) {
  json j;
  j["size"]     = M.size;
  j["identity"] = M.identity;
  j["zero"]     = M.has_zero() ? json(M.zero) : json(nullptr);
  json rows     = json::array();
  for (int a = 0; a < M.size; ++a) {
    json row = json::array();
    for (int b = 0; b < M.size; ++b) {
      row.push_back(M.at(a, b));
    }
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (M.labeled) {
    json labels = json::array();
    for (int e = 0; e < M.size; ++e) {
      if (e == M.zero) {
        labels.push_back("0");
      } else if (M.labels[e].empty()) {
        labels.push_back("1");
      } else {
        labels.push_back(to_string(M.labels[e]));
      }
    }
    j["labels"] = std::move(labels);
  } else {
    j["labels"] = nullptr;
  }
  return j;
}

inline FiniteMonoid monoid_from_json(json const& j) {
  FiniteMonoid M;
  M.size     = j.at("size").get<int>();
  M.identity = j.at("identity").get<int>();
  M.zero     = j.at("zero").is_null() ? -1 : j.at("zero").get<int>();
  M.table.reserve(static_cast<size_t>(M.size) * M.size);
  for (auto const& row : j.at("table")) {
    for (auto const& v : row) {
      M.table.push_back(v.get<int>());
    }
  }
  if (M.table.size() != static_cast<size_t>(M.size) * M.size) {
    throw parse_error("monoid JSON: table shape does not match size");
  }
  if (j.contains("labels") && !j.at("labels").is_null()) {
    M.labels.resize(M.size);
    for (int e = 0; e < M.size; ++e) {
      auto s = j.at("labels").at(e).get<std::string>();
      if (s == "0") {
        if (e != M.zero) {
          throw parse_error("monoid JSON: label \"0\" on a non-zero element");
        }
      } else if (s == "1") {
        M.labels[e] = Word();
      } else {
        M.labels[e] = parse_word(s);
      }
    }
    // Accept the labels as Rees structure only if products really are
    // concatenate-or-zero; otherwise fall back to the plain table.
    bool rees = M.has_zero();
    std::map<Word, int> index;
    for (int e = 0; rees && e < M.size; ++e) {
      if (e != M.zero && !index.emplace(M.labels[e], e).second) {
        rees = false;
      }
    }
    for (int a = 0; rees && a < M.size; ++a) {
      for (int b = 0; rees && b < M.size; ++b) {
        if (a == M.zero || b == M.zero) {
          rees = M.at(a, b) == M.zero;
          continue;
        }
        auto it = index.find(M.labels[a] + M.labels[b]);
        rees    = M.at(a, b) == (it == index.end() ? M.zero : it->second);
      }
    }
    M.labeled = rees;
    if (!rees) {
      M.labels.clear();
    }
  }
  if (!audit_monoid(M)) {
    throw parse_error("monoid JSON: table fails the monoid audits");
  }
  return M;
}

// `sw:<word>[,<word>...]` builds S(W); otherwise the argument is a path
// to a monoid JSON file.
inline FiniteMonoid parse_monoid_arg(std::string const& arg) {
  if (arg.rfind("sw:", 0) == 0) {
    std::vector<Word> W;
    std::string       body = arg.substr(3);
    size_t            pos  = 0;
    while (pos <= body.size()) {
      size_t next = body.find(',', pos);
      if (next == std::string::npos) {
        next = body.size();
      }
      W.push_back(parse_word(body.substr(pos, next - pos)));
      pos = next + 1;
    }
    return build_sw(W);
  }
  std::ifstream in(arg);
  if (!in) {
    throw parse_error("cannot open monoid file: " + arg);
  }
  json j;
  in >> j;
  return monoid_from_json(j);
}

}  // namespace monoidlab

#endif  // MONOIDLAB_IO_HPP_
