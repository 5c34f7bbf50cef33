#include "tptp/dot.hpp"

#include <map>
#include <sstream>

namespace tptp {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class DotWriter {
 public:
  explicit DotWriter(std::string name) { out_ << "digraph " << quote(name) << " {\n"; }

  std::string node(const std::string& key, const std::string& label, const std::string& attrs = "") {
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    std::string id = "n" + std::to_string(ids_.size());
    ids_.emplace(key, id);
    out_ << "  " << id << " [label=" << quote(label) << (attrs.empty() ? "" : ", " + attrs) << "];\n";
    return id;
  }

  void edge(const std::string& from, const std::string& to, const std::string& label, const std::string& attrs = "") {
    out_ << "  " << from << " -> " << to << " [label=" << quote(label) << (attrs.empty() ? "" : ", " + attrs)
         << "];\n";
  }

  void line(const std::string& s) { out_ << "  " << s << "\n"; }

  std::string finish() {
    out_ << "}\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
  std::map<std::string, std::string> ids_;
};

void draw_domains(DotWriter& w, const TarskianInterpretation& t) {
  for (const auto& d : t.domains) {
    for (const auto& id : d.element_ids()) w.node("e:" + id, id, "shape=ellipse");
  }
  auto element = [&](const ElementId& id) { return w.node("e:" + id, id, "shape=ellipse"); };

  std::size_t tuples = 0;
  for (const auto& m : t.mappings) {
    for (const auto& [args, value] : m.entries) {
      if (m.predicate) {
        if (value != kTrueValue) continue;
        if (args.empty()) {
          w.node("p:" + m.symbol, m.symbol, "shape=plaintext");
        } else if (args.size() == 1) {
          const std::string e = element(args[0]);
          w.edge(e, e, m.symbol, "style=dashed");
        } else {
          for (std::size_t i = 0; i + 1 < args.size(); ++i)
            w.edge(element(args[i]), element(args[i + 1]), m.symbol + "/" + std::to_string(i + 1), "style=dashed");
        }
        continue;
      }
      const std::string target = element(value);
      if (args.empty()) {
        const std::string c = w.node("c:" + m.symbol, m.symbol, "shape=box");
        w.edge(c, target, "");
      } else if (args.size() == 1) {
        w.edge(element(args[0]), target, m.symbol);
      } else {
        const std::string tuple = w.node("t:" + std::to_string(tuples++), m.symbol, "shape=point");
        for (std::size_t i = 0; i < args.size(); ++i) w.edge(element(args[i]), tuple, std::to_string(i + 1));
        w.edge(tuple, target, m.symbol);
      }
    }
  }
}

}  // namespace

std::string to_dot(const TarskianInterpretation& t) {
  DotWriter w("interpretation");
  draw_domains(w, t);
  return w.finish();
}

std::string to_dot(const KripkeInterpretation& k, DotView view) {
  if (view == DotView::Domains) {
    DotWriter w("interpretation");
    if (k.local_world && k.per_world.count(*k.local_world))
      draw_domains(w, k.per_world.at(*k.local_world).tarskian);
    else if (!k.per_world.empty())
      draw_domains(w, k.per_world.begin()->second.tarskian);
    return w.finish();
  }
  DotWriter w("worlds");
  for (const auto& world : k.worlds) {
    const bool local = k.local_world && *k.local_world == world;
    w.node(world, world, local ? "shape=doublecircle, style=bold" : "shape=circle");
  }
  for (const auto& [from, to] : k.accessible) w.edge(w.node(from, from), w.node(to, to), "");
  return w.finish();
}

std::string to_dot(const Interpretation& i, DotView view) {
  if (const auto* k = std::get_if<KripkeInterpretation>(&i)) return to_dot(*k, view);
  return to_dot(std::get<TarskianInterpretation>(i));
}

}  // namespace tptp
