#include "lingres/proof_export.hpp"

#include <iomanip>
#include <sstream>

#include "lingres/error.hpp"
#include "lingres/frontend.hpp"

namespace lingres {

namespace {

std::string atom_text(const AlgebraSignature& sig, const Atom& atom) {
  return atom.is_constant() ? format_term(sig, atom.value()) : atom.name();
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "proof json: " + what);
}

std::size_t locate(const Clause& c, const Atom& atom, const Term& label) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].atom == atom && c[i].label == label) return i;
  }
  schema_error("resolved literal not found in premise");
}

}  // namespace

nlohmann::json proof_to_json(const AlgebraSignature& sig, const ProofTree& proof) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : proof.nodes) {
    nlohmann::json node{
        {"id", n.id},
        {"clause", format_clause(sig, n.rc.clause)},
        {"reliability", format_term(sig, n.rc.reliability)},
    };
    if (n.origin) {
      node["premises"] = {n.origin->first, n.origin->second};
      node["atom"] = atom_text(sig, n.origin->atom);
      node["b1"] = format_term(sig, n.origin->b1);
      node["b2"] = format_term(sig, n.origin->b2);
    } else {
      node["premises"] = nlohmann::json::array();
      node["atom"] = nullptr;
      node["b1"] = nullptr;
      node["b2"] = nullptr;
    }
    nodes.push_back(std::move(node));
  }
  return nlohmann::json{
      {"root", proof.root().id},
      {"reliability", format_term(sig, proof.root().rc.reliability)},
      {"nodes", std::move(nodes)},
  };
}

ProofTree proof_from_json(const AlgebraSignature& sig, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array()) {
    schema_error("missing nodes array");
  }
  ProofTree tree;
  try {
    for (const auto& node : j["nodes"]) {
      ProofNode n;
      n.id = node.at("id").get<ClauseId>();
      n.rc.clause = parse_clause(sig, node.at("clause").get<std::string>());
      n.rc.reliability = parse_term(sig, node.at("reliability").get<std::string>());
      const auto& premises = node.at("premises");
      if (premises.size() == 2) {
        InferenceRecord r;
        r.first = premises[0].get<ClauseId>();
        r.second = premises[1].get<ClauseId>();
        const auto atom = node.at("atom").get<std::string>();
        if (auto t = try_parse_term(sig, atom)) {
          r.atom = Atom::constant(*t);
        } else {
          r.atom = Atom::variable(atom);
        }
        r.b1 = parse_term(sig, node.at("b1").get<std::string>());
        r.b2 = parse_term(sig, node.at("b2").get<std::string>());
        const ProofNode* p1 = tree.find(r.first);
        const ProofNode* p2 = tree.find(r.second);
        if (p1 == nullptr || p2 == nullptr) schema_error("premise listed after conclusion");
        r.first_literal = locate(p1->rc.clause, r.atom, r.b1);
        r.second_literal = locate(p2->rc.clause, r.atom, r.b2);
        n.origin = std::move(r);
      } else if (!premises.empty()) {
        schema_error("a node has zero or two premises");
      }
      tree.nodes.push_back(std::move(n));
    }
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
  if (tree.nodes.empty()) schema_error("no nodes");
  if (j.at("root").get<ClauseId>() != tree.root().id) schema_error("root is not the last node");
  return tree;
}

std::string proof_to_dot(const AlgebraSignature& sig, const ProofTree& proof) {
  std::ostringstream out;
  out << "digraph proof {\n";
  out << "  node [shape=box];\n";
  for (const auto& n : proof.nodes) {
    out << "  n" << n.id << " [label=\"" << dot_escape(format_clause(sig, n.rc.clause))
        << "\\n" << format_term(sig, n.rc.reliability) << "\"];\n";
  }
  for (const auto& n : proof.nodes) {
    if (!n.origin) continue;
    out << "  n" << n.origin->first << " -> n" << n.id << ";\n";
    out << "  n" << n.origin->second << " -> n" << n.id << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string proof_to_text(const AlgebraSignature& sig, const ProofTree& proof) {
  std::ostringstream out;
  for (const auto& n : proof.nodes) {
    out << std::setw(4) << n.id << "  " << format_clause(sig, n.rc.clause) << "  @ "
        << format_term(sig, n.rc.reliability);
    if (n.origin) {
      out << "  [" << n.origin->first << ',' << n.origin->second << " on "
          << atom_text(sig, n.origin->atom) << ": " << format_term(sig, n.origin->b1) << '/'
          << format_term(sig, n.origin->b2) << ']';
    } else {
      out << "  [input]";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lingres
