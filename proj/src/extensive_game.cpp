#include "zsum/extensive_game.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace zsum {

namespace {

std::string node_name(NodeId id) { return "node " + std::to_string(id); }

// Depth-first preorder from the root, children in stored order, robust to
// malformed trees (range errors and revisits are simply not descended).
template <typename Visit>
void preorder(const GameTree& t, Visit&& visit) {
  if (t.nodes.empty() || t.root >= t.nodes.size()) return;
  std::vector<char> seen(t.nodes.size(), 0);
  std::vector<NodeId> stack{t.root};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (id >= t.nodes.size() || seen[id]) continue;
    seen[id] = 1;
    visit(id);
    auto push = [&](NodeId child) {
      if (child < t.nodes.size() && !seen[child]) stack.push_back(child);
    };
    const GameNode& node = t.nodes[id];
    if (const auto* c = std::get_if<ChanceNode>(&node)) {
      for (auto it = c->branches.rbegin(); it != c->branches.rend(); ++it) push(it->child);
    } else if (const auto* p = std::get_if<PlayerNode>(&node)) {
      for (auto it = p->actions.rbegin(); it != p->actions.rend(); ++it) push(it->child);
    }
  }
}

struct InfosetGroup {
  Player owner = Player::one;
  std::string name;
  std::vector<NodeId> nodes;         // discovery order
  std::vector<std::string> actions;  // canonical order: the first node's
};

// Information sets in depth-first discovery order.
std::vector<InfosetGroup> collect_infosets(const GameTree& t) {
  std::vector<InfosetGroup> groups;
  std::map<std::string, std::size_t> index;
  preorder(t, [&](NodeId id) {
    const auto* p = std::get_if<PlayerNode>(&t.nodes[id]);
    if (!p) return;
    auto [it, fresh] = index.try_emplace(p->infoset, groups.size());
    if (fresh) {
      InfosetGroup g;
      g.owner = p->owner;
      g.name = p->infoset;
      for (const auto& a : p->actions) g.actions.push_back(a.action);
      groups.push_back(std::move(g));
    }
    groups[it->second].nodes.push_back(id);
  });
  return groups;
}

struct LeafStats {
  bool any = false;
  Rational min, max;

  void add(const Rational& v) {
    if (!any) {
      min = max = v;
      any = true;
    } else if (v < min) {
      min = v;
    } else if (v > max) {
      max = v;
    }
  }
  bool constant() const { return any && min == max; }
};

// Pools every terminal payoff in the subtree, from the given seat.
void accumulate_leaves(const GameTree& t, NodeId start, Player seat, LeafStats& stats) {
  std::vector<NodeId> stack{start};
  std::vector<char> seen(t.nodes.size(), 0);
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (id >= t.nodes.size() || seen[id]) continue;
    seen[id] = 1;
    const GameNode& node = t.nodes[id];
    if (const auto* term = std::get_if<TerminalNode>(&node)) {
      stats.add(seat == Player::one ? term->payoff : -term->payoff);
    } else if (const auto* c = std::get_if<ChanceNode>(&node)) {
      for (const auto& b : c->branches) stack.push_back(b.child);
    } else {
      for (const auto& a : std::get<PlayerNode>(node).actions) stack.push_back(a.child);
    }
  }
}

bool has_action(const GameTree& t, Player player, const std::string& infoset,
                const std::string& action) {
  for (const GameNode& node : t.nodes) {
    const auto* p = std::get_if<PlayerNode>(&node);
    if (!p || p->owner != player || p->infoset != infoset) continue;
    for (const auto& a : p->actions)
      if (a.action == action) return true;
  }
  return false;
}

// Drops nodes that lost their last parent and renumbers the survivors,
// keeping ascending id order.
GameTree compact(GameTree&& t) {
  std::vector<char> keep(t.nodes.size(), 0);
  preorder(t, [&](NodeId id) { keep[id] = 1; });
  std::vector<NodeId> remap(t.nodes.size(), 0);
  GameTree out;
  for (NodeId id = 0; id < t.nodes.size(); ++id) {
    if (!keep[id]) continue;
    remap[id] = out.nodes.size();
    out.nodes.push_back(std::move(t.nodes[id]));
  }
  for (GameNode& node : out.nodes) {
    if (auto* c = std::get_if<ChanceNode>(&node)) {
      for (auto& b : c->branches) b.child = remap[b.child];
    } else if (auto* p = std::get_if<PlayerNode>(&node)) {
      for (auto& a : p->actions) a.child = remap[a.child];
    }
  }
  out.root = remap[t.root];
  return out;
}

}  // namespace

std::vector<std::string> validate(const GameTree& t) {
  std::vector<std::string> out;
  const std::size_t n = t.nodes.size();
  if (n == 0) {
    out.emplace_back("tree has no nodes");
    return out;
  }
  if (t.root >= n) {
    out.push_back("root id " + std::to_string(t.root) + " is out of range");
    return out;
  }

  std::vector<std::size_t> parents(n, 0);
  bool edges_ok = true;
  auto note_child = [&](NodeId id, NodeId child) {
    if (child >= n) {
      out.push_back(node_name(id) + " references missing child " + std::to_string(child));
      edges_ok = false;
      return;
    }
    ++parents[child];
  };

  struct SetInfo {
    Player owner;
    std::vector<std::string> sorted_actions;
    NodeId first;
  };
  std::map<std::string, SetInfo> sets;

  for (NodeId id = 0; id < n; ++id) {
    const GameNode& node = t.nodes[id];
    if (const auto* c = std::get_if<ChanceNode>(&node)) {
      if (c->branches.empty())
        out.push_back("chance " + node_name(id) + " has no outcomes");
      Rational sum(0);
      std::vector<std::string> labels;
      for (const auto& b : c->branches) {
        if (!(b.prob > Rational(0)))
          out.push_back("chance " + node_name(id) + " outcome '" + b.label +
                        "' has non-positive probability " + b.prob.to_string());
        sum += b.prob;
        labels.push_back(b.label);
        note_child(id, b.child);
      }
      std::sort(labels.begin(), labels.end());
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        out.push_back("chance " + node_name(id) + " repeats an outcome label");
      if (!c->branches.empty() && sum != Rational(1))
        out.push_back("chance " + node_name(id) + " probabilities sum to " + sum.to_string() +
                      ", not 1");
    } else if (const auto* p = std::get_if<PlayerNode>(&node)) {
      if (p->actions.empty())
        out.push_back(node_name(id) + " (infoset '" + p->infoset + "') has no actions");
      std::vector<std::string> labels;
      for (const auto& a : p->actions) {
        labels.push_back(a.action);
        note_child(id, a.child);
      }
      std::sort(labels.begin(), labels.end());
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        out.push_back(node_name(id) + " (infoset '" + p->infoset + "') repeats an action label");
      auto [it, fresh] = sets.try_emplace(p->infoset, SetInfo{p->owner, labels, id});
      if (!fresh) {
        if (it->second.owner != p->owner)
          out.push_back("infoset '" + p->infoset + "' is owned by player " +
                        std::to_string(player_index(it->second.owner)) + " at " +
                        node_name(it->second.first) + " but player " +
                        std::to_string(player_index(p->owner)) + " at " + node_name(id));
        if (it->second.sorted_actions != labels)
          out.push_back("infoset '" + p->infoset + "' has different action sets at " +
                        node_name(it->second.first) + " and " + node_name(id));
      }
    }
  }

  for (NodeId id = 0; id < n; ++id) {
    if (id == t.root) {
      if (parents[id] != 0)
        out.push_back("root " + node_name(id) + " has a parent");
    } else if (parents[id] > 1) {
      out.push_back(node_name(id) + " has " + std::to_string(parents[id]) + " parents");
    }
  }

  // Reachability and perfect recall in one traversal. Own-move histories are
  // shared via parent links so deep trees stay cheap.
  if (edges_ok) {
    struct Link {
      const Link* up;
      const std::string* infoset;
      const std::string* action;
    };
    std::deque<Link> links;
    struct Frame {
      NodeId id;
      const Link* own[2];
    };
    std::vector<char> seen(n, 0);
    std::map<std::string, std::pair<bool, std::vector<std::pair<std::string, std::string>>>>
        recall;  // infoset -> (reported, canonical history)
    auto unroll = [](const Link* link) {
      std::vector<std::pair<std::string, std::string>> hist;
      for (; link; link = link->up) hist.emplace_back(*link->infoset, *link->action);
      std::reverse(hist.begin(), hist.end());
      return hist;
    };
    std::vector<Frame> stack{{t.root, {nullptr, nullptr}}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (seen[f.id]) continue;
      seen[f.id] = 1;
      const GameNode& node = t.nodes[f.id];
      if (const auto* c = std::get_if<ChanceNode>(&node)) {
        for (auto it = c->branches.rbegin(); it != c->branches.rend(); ++it)
          if (!seen[it->child]) stack.push_back({it->child, {f.own[0], f.own[1]}});
      } else if (const auto* p = std::get_if<PlayerNode>(&node)) {
        int seat = p->owner == Player::one ? 0 : 1;
        auto hist = unroll(f.own[seat]);
        auto [it, fresh] = recall.try_emplace(p->infoset, false, hist);
        if (!fresh && !it->second.first && it->second.second != hist) {
          out.push_back("infoset '" + p->infoset +
                        "' violates perfect recall: its nodes see different own histories");
          it->second.first = true;
        }
        for (auto ait = p->actions.rbegin(); ait != p->actions.rend(); ++ait) {
          if (seen[ait->child]) continue;
          links.push_back({f.own[seat], &p->infoset, &ait->action});
          Frame next{ait->child, {f.own[0], f.own[1]}};
          next.own[seat] = &links.back();
          stack.push_back(next);
        }
      }
    }
    for (NodeId id = 0; id < n; ++id)
      if (!seen[id]) out.push_back(node_name(id) + " is not reachable from the root");
  }

  return out;
}

std::vector<DominatedAction> dominated_actions(const GameTree& t, DominanceMode mode) {
  std::vector<DominatedAction> out;
  for (const InfosetGroup& g : collect_infosets(t)) {
    const std::size_t k = g.actions.size();
    if (k < 2) continue;
    std::vector<LeafStats> stats(k);
    for (NodeId id : g.nodes) {
      const auto& p = std::get<PlayerNode>(t.nodes[id]);
      for (const auto& a : p.actions) {
        auto pos = std::find(g.actions.begin(), g.actions.end(), a.action);
        if (pos == g.actions.end()) continue;  // inconsistent set; validate reports it
        accumulate_leaves(t, a.child, g.owner, stats[pos - g.actions.begin()]);
      }
    }
    for (std::size_t loser = 0; loser < k; ++loser) {
      if (!stats[loser].any) continue;
      for (std::size_t winner = 0; winner < k; ++winner) {
        if (winner == loser || !stats[winner].any) continue;
        bool dominated;
        if (mode == DominanceMode::strict) {
          dominated = stats[winner].min > stats[loser].max;
        } else {
          bool identical = stats[winner].constant() && stats[loser].constant() &&
                           stats[winner].min == stats[loser].min;
          dominated = stats[winner].min >= stats[loser].max && !identical;
        }
        if (dominated) {
          out.push_back({g.owner, g.name, g.actions[loser], g.actions[winner]});
          break;
        }
      }
    }
  }
  return out;
}

GameTree remove_action(const GameTree& t, Player player, const std::string& infoset,
                       const std::string& action) {
  std::vector<NodeId> members;
  for (NodeId id = 0; id < t.nodes.size(); ++id) {
    const auto* p = std::get_if<PlayerNode>(&t.nodes[id]);
    if (p && p->owner == player && p->infoset == infoset) members.push_back(id);
  }
  if (members.empty())
    throw std::invalid_argument("player " + std::to_string(player_index(player)) +
                                " has no information set named '" + infoset + "'");
  for (NodeId id : members) {
    const auto& p = std::get<PlayerNode>(t.nodes[id]);
    auto pos = std::find_if(p.actions.begin(), p.actions.end(),
                            [&](const ActionBranch& a) { return a.action == action; });
    if (pos == p.actions.end())
      throw std::invalid_argument("information set '" + infoset + "' has no action named '" +
                                  action + "'");
    if (p.actions.size() == 1)
      throw std::invalid_argument("cannot remove '" + action +
                                  "', the last action of information set '" + infoset + "'");
  }
  GameTree work = t;
  for (NodeId id : members) {
    auto& p = std::get<PlayerNode>(work.nodes[id]);
    p.actions.erase(std::find_if(p.actions.begin(), p.actions.end(),
                                 [&](const ActionBranch& a) { return a.action == action; }));
  }
  return compact(std::move(work));
}

ActionEliminationResult iterated_action_elimination(const GameTree& t, DominanceMode mode) {
  ActionEliminationResult result{t, {}};
  for (;;) {
    std::vector<DominatedAction> found = dominated_actions(result.reduced, mode);
    if (found.empty()) break;
    std::vector<DominatedAction> applied;
    for (const DominatedAction& d : found) {
      // An earlier removal this round may have deleted the subtree holding
      // this infoset; within an infoset at least one action always survives
      // the round, so existing entries stay removable.
      if (!has_action(result.reduced, d.player, d.infoset, d.action)) continue;
      result.reduced = remove_action(result.reduced, d.player, d.infoset, d.action);
      applied.push_back(d);
    }
    result.rounds.push_back(std::move(applied));
  }
  return result;
}

namespace {

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& msg) {
  throw std::runtime_error("game tree line " + std::to_string(lineno) + ": " + msg);
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// "{a:1:4,b:2:5}" with fields=3 -> [["a","1","4"], ["b","2","5"]].
std::vector<std::vector<std::string>> parse_group(std::size_t lineno, const std::string& raw,
                                                  std::size_t fields) {
  std::string s = trimmed(raw);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    parse_fail(lineno, "expected a {...} group, got '" + raw + "'");
  std::string inner = trimmed(s.substr(1, s.size() - 2));
  std::vector<std::vector<std::string>> items;
  if (inner.empty()) return items;
  std::size_t start = 0;
  while (start <= inner.size()) {
    std::size_t comma = inner.find(',', start);
    std::string piece = trimmed(inner.substr(start, comma == std::string::npos
                                                        ? std::string::npos
                                                        : comma - start));
    std::vector<std::string> parts;
    std::size_t from = 0;
    while (true) {
      std::size_t colon = piece.find(':', from);
      if (colon == std::string::npos) {
        parts.push_back(trimmed(piece.substr(from)));
        break;
      }
      parts.push_back(trimmed(piece.substr(from, colon - from)));
      from = colon + 1;
    }
    bool ok = parts.size() == fields;
    for (const std::string& part : parts)
      if (part.empty()) ok = false;
    if (!ok)
      parse_fail(lineno, "entry '" + piece + "' must have " + std::to_string(fields) +
                             " ':'-separated fields");
    items.push_back(std::move(parts));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

NodeId parse_id(std::size_t lineno, const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(lineno, "expected a node id, got '" + token + "'");
  return static_cast<NodeId>(std::strtoull(token.c_str(), nullptr, 10));
}

Rational parse_rational(std::size_t lineno, const std::string& token) {
  try {
    return Rational::from_string(token);
  } catch (const std::exception& e) {
    parse_fail(lineno, std::string("bad rational '") + token + "': " + e.what());
  }
}

}  // namespace

GameTree read_game_tree(std::istream& in) {
  std::map<NodeId, std::pair<GameNode, std::size_t>> raw;  // file id -> (node, line)
  bool have_root = false;
  NodeId root_id = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string text = trimmed(line);
    if (text.empty() || text.front() == '#') continue;
    std::istringstream ls(text);
    std::string head;
    ls >> head;
    if (head == "root") {
      std::string id_token, extra;
      if (!(ls >> id_token)) parse_fail(lineno, "root line is missing the node id");
      if (ls >> extra) parse_fail(lineno, "unexpected trailing '" + extra + "'");
      if (have_root) parse_fail(lineno, "duplicate root line");
      root_id = parse_id(lineno, id_token);
      have_root = true;
      continue;
    }
    if (head != "node") parse_fail(lineno, "expected 'node' or 'root', got '" + head + "'");
    std::string id_token, kind;
    if (!(ls >> id_token >> kind)) parse_fail(lineno, "incomplete node line");
    NodeId id = parse_id(lineno, id_token);
    if (raw.count(id)) parse_fail(lineno, "duplicate node id " + std::to_string(id));
    if (kind == "terminal") {
      std::string payoff, extra;
      if (!(ls >> payoff)) parse_fail(lineno, "terminal line is missing the payoff");
      if (ls >> extra) parse_fail(lineno, "unexpected trailing '" + extra + "'");
      raw.emplace(id, std::make_pair(GameNode(TerminalNode{parse_rational(lineno, payoff)}),
                                     lineno));
    } else if (kind == "chance") {
      std::string rest;
      std::getline(ls, rest);
      ChanceNode node;
      for (auto& item : parse_group(lineno, rest, 3))
        node.branches.push_back(
            {item[0], parse_rational(lineno, item[1]), parse_id(lineno, item[2])});
      raw.emplace(id, std::make_pair(GameNode(std::move(node)), lineno));
    } else if (kind == "player") {
      std::string seat, kw, name, rest;
      if (!(ls >> seat >> kw >> name)) parse_fail(lineno, "incomplete player line");
      if (seat != "1" && seat != "2")
        parse_fail(lineno, "player must be 1 or 2, got '" + seat + "'");
      if (kw != "infoset") parse_fail(lineno, "expected 'infoset', got '" + kw + "'");
      std::getline(ls, rest);
      PlayerNode node;
      node.owner = seat == "1" ? Player::one : Player::two;
      node.infoset = name;
      for (auto& item : parse_group(lineno, rest, 2))
        node.actions.push_back({item[0], parse_id(lineno, item[1])});
      raw.emplace(id, std::make_pair(GameNode(std::move(node)), lineno));
    } else {
      parse_fail(lineno, "unknown node kind '" + kind + "'");
    }
  }
  if (raw.empty()) throw std::runtime_error("game tree: no node records found");
  if (!have_root) throw std::runtime_error("game tree: missing 'root <id>' line");

  GameTree out;
  std::map<NodeId, NodeId> remap;
  for (const auto& [id, entry] : raw) {
    remap[id] = out.nodes.size();
    out.nodes.push_back(entry.first);
  }
  auto lookup = [&](std::size_t lineno_of, NodeId child) {
    auto it = remap.find(child);
    if (it == remap.end())
      parse_fail(lineno_of, "child id " + std::to_string(child) + " has no node record");
    return it->second;
  };
  for (const auto& [id, entry] : raw) {
    GameNode& node = out.nodes[remap[id]];
    if (auto* c = std::get_if<ChanceNode>(&node)) {
      for (auto& b : c->branches) b.child = lookup(entry.second, b.child);
    } else if (auto* p = std::get_if<PlayerNode>(&node)) {
      for (auto& a : p->actions) a.child = lookup(entry.second, a.child);
    }
  }
  auto root_it = remap.find(root_id);
  if (root_it == remap.end())
    throw std::runtime_error("game tree: root id " + std::to_string(root_id) +
                             " has no node record");
  out.root = root_it->second;
  return out;
}

GameTree read_game_tree(const std::string& text) {
  std::istringstream in(text);
  return read_game_tree(in);
}

void write_game_tree(std::ostream& out, const GameTree& t) {
  for (NodeId id = 0; id < t.nodes.size(); ++id) {
    const GameNode& node = t.nodes[id];
    if (const auto* c = std::get_if<ChanceNode>(&node)) {
      out << "node " << id << " chance {";
      for (std::size_t i = 0; i < c->branches.size(); ++i) {
        if (i) out << ',';
        out << c->branches[i].label << ':' << c->branches[i].prob.to_string() << ':'
            << c->branches[i].child;
      }
      out << "}\n";
    } else if (const auto* p = std::get_if<PlayerNode>(&node)) {
      out << "node " << id << " player " << player_index(p->owner) << " infoset " << p->infoset
          << " {";
      for (std::size_t i = 0; i < p->actions.size(); ++i) {
        if (i) out << ',';
        out << p->actions[i].action << ':' << p->actions[i].child;
      }
      out << "}\n";
    } else {
      out << "node " << id << " terminal " << std::get<TerminalNode>(node).payoff.to_string()
          << "\n";
    }
  }
  out << "root " << t.root << "\n";
}

std::string write_game_tree(const GameTree& t) {
  std::ostringstream out;
  write_game_tree(out, t);
  return out.str();
}

SequenceForm to_sequence_form(const GameTree& t) {
  if (t.nodes.empty() || t.root >= t.nodes.size())
    throw std::invalid_argument("to_sequence_form: malformed tree (bad root)");
  SequenceForm sf;
  sf.sequences[0].push_back({0, 0, ""});
  sf.sequences[1].push_back({0, 0, ""});
  std::array<std::map<std::string, std::size_t>, 2> set_index;

  struct Frame {
    NodeId id;
    std::size_t seq[2];
    Rational reach;
  };
  struct Hit {
    std::size_t s1, s2;
    Rational value;
  };
  std::vector<Hit> hits;
  std::vector<char> seen(t.nodes.size(), 0);
  std::vector<Frame> stack{{t.root, {0, 0}, Rational(1)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.id >= t.nodes.size())
      throw std::invalid_argument("to_sequence_form: child id out of range");
    if (seen[f.id])
      throw std::invalid_argument("to_sequence_form: node " + std::to_string(f.id) +
                                  " has several parents; the input is not a tree");
    seen[f.id] = 1;
    const GameNode& node = t.nodes[f.id];
    if (const auto* term = std::get_if<TerminalNode>(&node)) {
      hits.push_back({f.seq[0], f.seq[1], f.reach * term->payoff});
      continue;
    }
    if (const auto* c = std::get_if<ChanceNode>(&node)) {
      for (auto it = c->branches.rbegin(); it != c->branches.rend(); ++it) {
        Frame next{it->child, {f.seq[0], f.seq[1]}, f.reach * it->prob};
        stack.push_back(std::move(next));
      }
      continue;
    }
    const auto& p = std::get<PlayerNode>(node);
    const int seat = p.owner == Player::one ? 0 : 1;
    auto& seqs = sf.sequences[seat];
    auto& sets = sf.infosets[seat];
    auto [it, fresh] = set_index[seat].try_emplace(p.infoset, sets.size());
    if (fresh) {
      SequenceForm::Infoset is;
      is.name = p.infoset;
      is.parent_seq = f.seq[seat];
      for (const auto& a : p.actions) {
        is.actions.push_back(a.action);
        is.action_seqs.push_back(seqs.size());
        seqs.push_back({f.seq[seat], it->second, a.action});
      }
      sets.push_back(std::move(is));
    } else {
      const SequenceForm::Infoset& is = sets[it->second];
      if (is.parent_seq != f.seq[seat])
        throw std::invalid_argument("to_sequence_form: infoset '" + p.infoset +
                                    "' violates perfect recall");
      if (is.actions.size() != p.actions.size())
        throw std::invalid_argument("to_sequence_form: infoset '" + p.infoset +
                                    "' has inconsistent action sets");
    }
    const SequenceForm::Infoset& is = sets[it->second];
    for (auto ait = p.actions.rbegin(); ait != p.actions.rend(); ++ait) {
      auto pos = std::find(is.actions.begin(), is.actions.end(), ait->action);
      if (pos == is.actions.end())
        throw std::invalid_argument("to_sequence_form: infoset '" + p.infoset +
                                    "' has inconsistent action sets");
      Frame next{ait->child, {f.seq[0], f.seq[1]}, f.reach};
      next.seq[seat] = is.action_seqs[pos - is.actions.begin()];
      stack.push_back(std::move(next));
    }
  }

  sf.payoff.assign(sf.sequences[0].size(),
                   std::vector<Rational>(sf.sequences[1].size(), Rational(0)));
  for (const Hit& h : hits) sf.payoff[h.s1][h.s2] += h.value;

  auto build = [](const std::vector<SequenceForm::Sequence>& seqs,
                  const std::vector<SequenceForm::Infoset>& sets,
                  std::vector<std::vector<Rational>>& M, std::vector<Rational>& v) {
    M.assign(1 + sets.size(), std::vector<Rational>(seqs.size(), Rational(0)));
    v.assign(1 + sets.size(), Rational(0));
    M[0][0] = Rational(1);
    v[0] = Rational(1);
    for (std::size_t u = 0; u < sets.size(); ++u) {
      M[1 + u][sets[u].parent_seq] -= Rational(1);
      for (std::size_t s : sets[u].action_seqs) M[1 + u][s] += Rational(1);
    }
  };
  build(sf.sequences[0], sf.infosets[0], sf.E, sf.e);
  build(sf.sequences[1], sf.infosets[1], sf.F, sf.f);
  return sf;
}

}  // namespace zsum
