#include "memred/game_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace memred {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known |= item.key() == k;
    if (!known)
      throw validation_error(std::string("unknown key \"") + item.key() + "\" in " + where);
  }
}

VertexSet parse_set(const json& arr, const char* where) {
  if (!arr.is_array()) throw validation_error(std::string(where) + " must be an array");
  std::vector<VertexId> ids;
  for (const auto& e : arr) {
    if (!e.is_number_unsigned())
      throw validation_error(std::string(where) + " must list vertex ids");
    ids.push_back(e.get<VertexId>());
  }
  return make_vertex_set(std::move(ids));
}

WinningCondition parse_condition(const json& c) {
  if (!c.is_object()) throw validation_error("condition must be an object");
  if (!c.contains("type")) throw validation_error("condition is missing \"type\"");
  const std::string type = c.at("type").get<std::string>();

  if (type == "rr" || type == "streett") {
    reject_unknown_keys(c, {"type", "pairs"}, "condition");
    if (!c.contains("pairs") || !c.at("pairs").is_array())
      throw validation_error("condition needs a \"pairs\" array");
    if (type == "rr") {
      RequestResponseCondition rr;
      for (const auto& p : c.at("pairs")) {
        if (!p.is_array() || p.size() != 2)
          throw validation_error("each rr pair must be [requests, responses]");
        rr.pairs.push_back({parse_set(p[0], "request set"), parse_set(p[1], "response set")});
      }
      return rr;
    }
    StreettCondition st;
    for (const auto& p : c.at("pairs")) {
      if (!p.is_array() || p.size() != 2)
        throw validation_error("each streett pair must be [E, F]");
      st.pairs.push_back({parse_set(p[0], "streett E set"), parse_set(p[1], "streett F set")});
    }
    return st;
  }

  if (type == "buchi") {
    reject_unknown_keys(c, {"type", "final"}, "condition");
    if (!c.contains("final")) throw validation_error("buchi condition needs \"final\"");
    return BuchiCondition{parse_set(c.at("final"), "final set")};
  }

  if (type == "parity") {
    reject_unknown_keys(c, {"type", "colors", "polarity"}, "condition");
    if (!c.contains("colors") || !c.at("colors").is_array())
      throw validation_error("parity condition needs a \"colors\" array");
    ParityCondition par;
    for (const auto& e : c.at("colors")) {
      if (!e.is_number_integer()) throw validation_error("colors must be integers");
      par.colors.push_back(e.get<int>());
    }
    if (c.contains("polarity")) {
      const std::string p = c.at("polarity").get<std::string>();
      if (p == "max_even")
        par.polarity = Polarity::MaxEven;
      else if (p == "min_even")
        par.polarity = Polarity::MinEven;
      else
        throw validation_error("polarity must be \"max_even\" or \"min_even\"");
    }
    return par;
  }

  throw validation_error("condition type must be one of rr|streett|buchi|parity");
}

}  // namespace

Game parse_game(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw validation_error(std::string("malformed game file: ") + e.what());
  }
  if (!doc.is_object()) throw validation_error("game file must be a JSON object");
  reject_unknown_keys(doc, {"vertices", "edges", "condition"}, "game");
  if (!doc.contains("vertices") || !doc.contains("edges") || !doc.contains("condition"))
    throw validation_error("game file needs \"vertices\", \"edges\" and \"condition\"");

  Game game;
  auto& vertices = game.arena.vertices;
  for (const auto& v : doc.at("vertices")) {
    if (!v.is_object()) throw validation_error("each vertex must be an object");
    reject_unknown_keys(v, {"id", "owner", "label"}, "vertex");
    if (!v.contains("id") || !v.contains("owner"))
      throw validation_error("each vertex needs \"id\" and \"owner\"");
    Vertex vert;
    vert.id = v.at("id").get<VertexId>();
    const int owner = v.at("owner").get<int>();
    if (owner != 0 && owner != 1) throw validation_error("owner must be 0 or 1");
    vert.owner = owner == 0 ? Player::Zero : Player::One;
    if (v.contains("label")) vert.label = v.at("label").get<std::string>();
    vertices.push_back(std::move(vert));
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });

  game.arena.edges.assign(vertices.size(), {});
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw validation_error("each edge must be a [src, dst] pair");
    const VertexId src = e[0].get<VertexId>();
    const VertexId dst = e[1].get<VertexId>();
    if (src >= vertices.size())
      throw bad_reference_error("edge source " + std::to_string(src) + " is not a vertex");
    game.arena.edges[src].push_back(dst);
  }

  game.condition = parse_condition(doc.at("condition"));
  validate(game);
  return game;
}

Game load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

std::string serialize_game(const Game& game) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& v : game.arena.vertices) {
    json jv{{"id", v.id}, {"owner", v.owner == Player::Zero ? 0 : 1}};
    if (!v.label.empty()) jv["label"] = v.label;
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = json::array();
  for (VertexId src = 0; src < game.arena.size(); ++src)
    for (VertexId dst : game.arena.edges[src]) doc["edges"].push_back({src, dst});

  json cond;
  cond["type"] = condition_name(game.condition);
  if (const auto* rr = std::get_if<RequestResponseCondition>(&game.condition)) {
    cond["pairs"] = json::array();
    for (const auto& p : rr->pairs) cond["pairs"].push_back({p.request, p.response});
  } else if (const auto* st = std::get_if<StreettCondition>(&game.condition)) {
    cond["pairs"] = json::array();
    for (const auto& p : st->pairs) cond["pairs"].push_back({p.e_set, p.f_set});
  } else if (const auto* b = std::get_if<BuchiCondition>(&game.condition)) {
    cond["final"] = b->final_vertices;
  } else {
    const auto& par = std::get<ParityCondition>(game.condition);
    cond["colors"] = par.colors;
    cond["polarity"] = par.polarity == Polarity::MaxEven ? "max_even" : "min_even";
  }
  doc["condition"] = std::move(cond);
  return doc.dump(2) + "\n";
}

void save_game(const Game& game, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << serialize_game(game);
}

std::string serialize_simulated_game(const SimulatedGame& sim) {
  json doc = json::parse(serialize_game(sim.product));
  doc["memory_of"] = json::array();
  for (const auto& [mem, v] : sim.memory_of) doc["memory_of"].push_back({mem, v});
  return doc.dump(2) + "\n";
}

}  // namespace memred
