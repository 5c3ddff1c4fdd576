#include "occat/json_io.hpp"

#include "occat/error.hpp"

namespace occat {

using nlohmann::json;

namespace {

Brane brane_named(const BraneSet& branes, const std::string& name) {
  auto b = branes.find(name);
  if (!b) throw PreconditionError("unknown brane '" + name + "'");
  return *b;
}

json counts_json(const BraneSet& branes, const BraneCounts& counts) {
  json j = json::object();
  for (std::size_t b = 0; b < counts.size(); ++b) {
    j[branes.name(Brane{static_cast<std::uint32_t>(b)})] = counts[b];
  }
  return j;
}

json component_summary_json(const BraneSet& branes, const ComponentSummary& s) {
  return json{{"genus", s.genus},
              {"windows", counts_json(branes, s.windows)},
              {"euler", s.euler},
              {"c", s.fixed_boundary},
              {"b", s.has_outgoing},
              {"boundary",
               {{"in", s.kinds.in_closed},
                {"out", s.kinds.out_closed},
                {"window", s.kinds.windows},
                {"mixed", s.kinds.mixed}}}};
}

}  // namespace

json to_json(const Permutation& p) {
  return json{{"domain", p.domain()}, {"cycles", p.cycles()}};
}

Permutation permutation_from_json(const json& j) {
  return Permutation::from_cycles(j.at("domain").get<std::vector<Index>>(),
                                  j.at("cycles").get<std::vector<std::vector<Index>>>());
}

json to_json(const BraneSet& branes, const GeneralObject& obj) {
  json entries = json::array();
  for (const auto& e : obj.entries()) {
    if (const auto* iv = std::get_if<Interval>(&e)) {
      entries.push_back(json{{"I", {branes.name(iv->left), branes.name(iv->right)}}});
    } else {
      entries.push_back("O");
    }
  }
  return json{{"entries", entries}, {"sigma", obj.sigma().cycles()}};
}

GeneralObject object_from_json(const json& j, const BraneSet& branes) {
  std::vector<Entry> entries;
  for (const auto& e : j.at("entries")) {
    if (e.is_string() && e.get<std::string>() == "O") {
      entries.emplace_back(Circle{});
    } else {
      const auto& ends = e.at("I");
      entries.emplace_back(Interval{brane_named(branes, ends.at(0).get<std::string>()),
                                    brane_named(branes, ends.at(1).get<std::string>())});
    }
  }
  GeneralObject obj(branes, std::move(entries));
  return obj.with_sigma(Permutation::from_cycles(
      obj.interval_indices(), j.at("sigma").get<std::vector<std::vector<Index>>>()));
}

json to_json(const Cobordism& c) {
  const BraneSet& branes = c.source.branes();
  json comps = json::array();
  for (const auto& comp : c.components) {
    json boundary = json::array();
    for (const auto& circle : comp.boundary) {
      if (const auto* in = std::get_if<InClosed>(&circle)) {
        boundary.push_back({{"in", in->index}});
      } else if (const auto* out = std::get_if<OutClosed>(&circle)) {
        boundary.push_back({{"out", out->index}});
      } else if (const auto* w = std::get_if<Window>(&circle)) {
        boundary.push_back({{"window", branes.name(w->brane)}});
      } else {
        json cycle = json::array();
        for (const auto& e : std::get<Mixed>(circle).cycle) {
          if (const auto* ref = std::get_if<IntervalRef>(&e)) {
            cycle.push_back({{ref->side == Side::Incoming ? "in" : "out", ref->index},
                             {"reversed", ref->reversed}});
          } else {
            cycle.push_back({{"arc", branes.name(std::get<Arc>(e).brane)}});
          }
        }
        boundary.push_back({{"mixed", cycle}});
      }
    }
    comps.push_back({{"genus", comp.genus}, {"boundary", boundary}});
  }
  return json{{"source", to_json(branes, c.source)},
              {"target", to_json(branes, c.target)},
              {"components", comps}};
}

Cobordism cobordism_from_json(const json& j, const BraneSet& branes) {
  Cobordism c{object_from_json(j.at("source"), branes),
              object_from_json(j.at("target"), branes), {}};
  for (const auto& jc : j.at("components")) {
    Component comp;
    comp.genus = jc.at("genus").get<std::uint32_t>();
    for (const auto& jb : jc.at("boundary")) {
      if (jb.contains("in")) {
        comp.boundary.push_back(InClosed{jb["in"].get<Index>()});
      } else if (jb.contains("out")) {
        comp.boundary.push_back(OutClosed{jb["out"].get<Index>()});
      } else if (jb.contains("window")) {
        comp.boundary.push_back(Window{brane_named(branes, jb["window"].get<std::string>())});
      } else {
        Mixed m;
        for (const auto& je : jb.at("mixed")) {
          if (je.contains("arc")) {
            m.cycle.emplace_back(Arc{brane_named(branes, je["arc"].get<std::string>())});
          } else {
            const Side side = je.contains("in") ? Side::Incoming : Side::Outgoing;
            const Index index = je.at(side == Side::Incoming ? "in" : "out").get<Index>();
            m.cycle.emplace_back(IntervalRef{side, index, je.at("reversed").get<bool>()});
          }
        }
        comp.boundary.emplace_back(std::move(m));
      }
    }
    c.components.push_back(std::move(comp));
  }
  return c;
}

json to_json(const Document& doc) {
  json objects = json::array();
  for (const auto& o : doc.objects) {
    json jo = to_json(doc.branes, o.object);
    jo["name"] = o.name;
    objects.push_back(std::move(jo));
  }
  json cobordisms = json::array();
  for (const auto& c : doc.cobordisms) {
    json jc = to_json(c.cobordism);
    jc["name"] = c.name;
    jc["source_name"] = c.source;
    jc["target_name"] = c.target;
    cobordisms.push_back(std::move(jc));
  }
  return json{{"format", kJsonFormat},
              {"branes", doc.branes.names()},
              {"objects", objects},
              {"cobordisms", cobordisms}};
}

Document document_from_json(const json& j) {
  if (j.at("format").get<int>() != kJsonFormat) {
    throw PreconditionError("unsupported JSON format version");
  }
  Document doc;
  doc.branes = BraneSet(j.at("branes").get<std::vector<std::string>>());
  for (const auto& jo : j.at("objects")) {
    doc.objects.push_back({jo.at("name").get<std::string>(), object_from_json(jo, doc.branes)});
  }
  for (const auto& jc : j.at("cobordisms")) {
    doc.cobordisms.push_back({jc.at("name").get<std::string>(),
                              jc.at("source_name").get<std::string>(),
                              jc.at("target_name").get<std::string>(),
                              cobordism_from_json(jc, doc.branes)});
  }
  return doc;
}

json to_json(const BraneSet& branes, const InvariantSummary& s) {
  json comps = json::array();
  long chi = 0;
  bool b_flag = true;
  for (const auto& cs : s.components) {
    comps.push_back(component_summary_json(branes, cs));
    chi += cs.euler;
    b_flag = b_flag && cs.has_outgoing;
  }
  return json{{"components", comps},
              {"total",
               {{"genus", s.total_genus},
                {"windows", counts_json(branes, s.total_windows)},
                {"euler", chi},
                {"components", s.component_count},
                {"b", b_flag}}}};
}

json to_json(const BraneSet& branes, const std::vector<StrataRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"g", r.genus},
                   {"w", counts_json(branes, r.windows)},
                   {"c", r.c},
                   {"b", r.in_b}});
  }
  return out;
}

}  // namespace occat
