#include "sncdp/setup_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sncdp {

namespace {

ParseError line_error(const std::string& message, int line) { return ParseError(message, line, "line"); }

std::string trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Entry {
  std::string value;
  int line = 0;
};

struct Section {
  std::string kind;
  std::string name;
  int line = 0;
  std::map<std::string, Entry> entries;
  std::set<std::string> used;

  bool has(const std::string& key) const { return entries.count(key) > 0; }

  const Entry& get(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) throw line_error("missing key '" + key + "' in " + title(), line);
    used.insert(key);
    return it->second;
  }

  std::optional<Entry> find(const std::string& key) {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    used.insert(key);
    return it->second;
  }

  std::string title() const { return "[" + kind + (name.empty() ? "" : " " + name) + "]"; }

  void check_all_used() const {
    for (const auto& [key, entry] : entries) {
      if (!used.count(key)) throw line_error("unknown key '" + key + "' in " + title(), entry.line);
    }
  }
};

int to_int(const Entry& e, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(e.value, &used);
    if (used != e.value.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::logic_error&) {
    throw line_error("expected an integer for " + what + ", got '" + e.value + "'", e.line);
  }
}

bool to_bool(const Entry& e, const std::string& what) {
  if (e.value == "true" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "no") return false;
  throw line_error("expected true or false for " + what, e.line);
}

// Re-throws parse errors from value text with the line number of the entry.
template <typename F>
auto at_line(const Entry& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& err) {
    throw line_error(std::string(err.what()) + " in '" + e.value + "'", e.line);
  }
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const Entry& e) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : split(e.value, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw line_error("expected name=value in '" + item + "'", e.line);
    out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  return out;
}

class Document {
 public:
  explicit Document(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    Section* current = nullptr;
    while (std::getline(in, raw)) {
      ++line;
      std::string s = trim(raw);
      if (s.empty() || s[0] == '#') continue;
      if (s.front() == '[') {
        if (s.back() != ']') throw line_error("unterminated section header", line);
        auto w = words(s.substr(1, s.size() - 2));
        if (w.empty() || w.size() > 2) throw line_error("bad section header '" + s + "'", line);
        Section sec{w[0], w.size() == 2 ? w[1] : "", line, {}, {}};
        for (const auto& other : sections_) {
          if (other.kind == sec.kind && other.name == sec.name) {
            throw line_error("duplicate section " + sec.title(), line);
          }
        }
        sections_.push_back(std::move(sec));
        current = &sections_.back();
        continue;
      }
      auto eq = s.find('=');
      if (eq == std::string::npos) throw line_error("expected key = value", line);
      if (!current) throw line_error("entry outside of any section", line);
      std::string key = trim(s.substr(0, eq));
      if (key.empty()) throw line_error("empty key", line);
      if (current->entries.count(key)) throw line_error("duplicate key '" + key + "'", line);
      current->entries[key] = {trim(s.substr(eq + 1)), line};
    }
  }

  Section* find(const std::string& kind, const std::string& name = "") {
    for (auto& s : sections_) {
      if (s.kind == kind && s.name == name) return &s;
    }
    return nullptr;
  }

  Section& require(const std::string& kind, const std::string& name = "") {
    Section* s = find(kind, name);
    if (!s) throw line_error("missing section [" + kind + (name.empty() ? "" : " " + name) + "]", 0);
    return *s;
  }

  std::vector<Section>& sections() { return sections_; }

  const Variety& variety(const std::string& name, int line) {
    auto it = varieties_.find(name);
    if (it != varieties_.end()) return it->second;
    if (building_.count(name)) throw line_error("cyclic variety definition '" + name + "'", line);
    Section* s = find("variety", name);
    if (!s) throw line_error("unknown variety '" + name + "'", line);
    building_.insert(name);
    Variety v = build_variety(*s);
    building_.erase(name);
    return varieties_.emplace(name, std::move(v)).first->second;
  }

 private:
  Variety build_variety(Section& s) {
    if (auto c = s.find("construct")) {
      auto w = words(c->value);
      if (w.empty()) throw line_error("empty construct", c->line);
      Variety v;
      auto argc = [&](std::size_t n) {
        if (w.size() != n) throw line_error("wrong number of arguments for '" + w[0] + "'", c->line);
      };
      auto number = [&](const std::string& t) { return to_int(Entry{t, c->line}, w[0]); };
      if (w[0] == "point") {
        argc(1);
        v = point();
      } else if (w[0] == "projective_space") {
        argc(3);
        v = projective_space(number(w[1]), w[2]);
      } else if (w[0] == "hirzebruch") {
        argc(2);
        v = hirzebruch(number(w[1]));
      } else if (w[0] == "product") {
        argc(3);
        v = product(variety(w[1], c->line), variety(w[2], c->line));
      } else if (w[0] == "bundle") {
        if (w.size() < 4) throw line_error("bundle needs a base, a fiber variable and a Chern class", c->line);
        const Variety& base = variety(w[1], c->line);
        std::size_t after_base = c->value.find(w[1]) + w[1].size();
        std::string chern = c->value.substr(c->value.find(w[2], after_base) + w[2].size());
        ChowClass total = at_line(*c, [&] { return base.cls(chern); });
        v = projective_bundle(base, {2, total}, w[2]).total;
      } else {
        throw line_error("unknown construct '" + w[0] + "'", c->line);
      }
      if (auto label = s.find("label")) v.label = label->value;
      s.check_all_used();
      return v;
    }

    const Entry& vars = s.get("variables");
    std::vector<VariableSpec> specs;
    for (const auto& item : split(vars.value, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) {
        specs.push_back({item, 1});
      } else {
        specs.push_back({trim(item.substr(0, colon)), to_int(Entry{trim(item.substr(colon + 1)), vars.line}, "degree")});
      }
    }
    const Entry& rel = s.get("relations");
    std::vector<RuleText> rules;
    for (const auto& item : split(rel.value, ';')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw line_error("relation without '=' in '" + item + "'", rel.line);
      std::string lhs = trim(item.substr(0, eq));
      RuleText r{lhs, 1, trim(item.substr(eq + 1))};
      auto caret = lhs.find('^');
      if (caret != std::string::npos) {
        r.variable = trim(lhs.substr(0, caret));
        r.power = to_int(Entry{trim(lhs.substr(caret + 1)), rel.line}, "relation exponent");
      }
      rules.push_back(std::move(r));
    }
    int dim = to_int(s.get("dim"), "dim");
    const Entry& pt = s.get("point");
    RingPtr ring = at_line(rel, [&] { return make_ring(specs, rules, dim, pt.value); });
    const Entry& tan = s.get("tangent_ch");
    KClass tangent(at_line(tan, [&] { return parse_class(ring, tan.value); }));
    std::string label = s.name;
    if (auto l = s.find("label")) label = l->value;
    s.check_all_used();
    return make_variety(ring, tangent, label);
  }

  std::vector<Section> sections_;
  std::map<std::string, Variety> varieties_;
  std::set<std::string> building_;
};

SurfaceType parse_type(const std::string& t, int line) {
  if (t == "P2") return SurfaceType::p2();
  if (t.size() > 1 && t[0] == 'F') return SurfaceType::f(to_int(Entry{t.substr(1), line}, "Hirzebruch index"));
  throw line_error("unknown surface type '" + t + "'", line);
}

SncConfiguration parse_surface(Section& s) {
  const Entry& comps = s.get("components");
  SncConfiguration config;
  auto types = split(comps.value, ',');
  for (std::size_t i = 0; i < types.size(); ++i) {
    SurfaceType type = parse_type(types[i], comps.line);
    Variety v = surface_variety(type);
    std::vector<std::pair<int, int>> curves;
    if (auto b = s.find("boundary." + std::to_string(i))) {
      for (const auto& text : split(b->value, ';')) {
        ChowClass c = at_line(*b, [&] { return v.cls(text); });
        if (!c.is_homogeneous(1)) throw DomainError("boundary curve '" + text + "' is not a divisor class");
        auto coeff = [&](const char* name) {
          Rational r = c.coefficient(ChowClass::generator(v.ring, name).terms().begin()->first);
          if (!is_integer(r)) throw DomainError("boundary curve '" + text + "' has fractional coefficients");
          return static_cast<int>(numerator(r));
        };
        if (type.kind == SurfaceKind::P2) {
          curves.emplace_back(coeff("l"), 0);
        } else {
          curves.emplace_back(coeff("e"), coeff("f"));
        }
      }
    }
    config.components.push_back(make_component(type, curves));
  }
  if (auto g = s.find("gluing")) {
    for (const auto& item : split(g->value, ';')) {
      auto sides = split(item, '~');
      if (sides.size() != 2) throw line_error("gluing must read 'i.c ~ j.d'", g->line);
      auto side = [&](const std::string& t) {
        auto parts = split(t, '.');
        if (parts.size() != 2) throw line_error("gluing side must read 'component.curve'", g->line);
        return std::pair{to_int(Entry{parts[0], g->line}, "component"), to_int(Entry{parts[1], g->line}, "curve")};
      };
      auto [ci, cu] = side(sides[0]);
      auto [cj, cv] = side(sides[1]);
      config.gluings.push_back({ci, cu, cj, cv});
    }
  }
  s.check_all_used();
  return config;
}

}  // namespace

SetupDocument parse_setup(std::string_view text) {
  Document doc(text);
  SetupDocument out;
  FamilySetup& f = out.family;

  Section& head = doc.require("setup");
  f.name = head.get("name").value;
  f.curve_class_label = head.get("curve_class").value;
  const Entry& m = head.get("moduli");
  f.moduli = doc.variety(m.value, m.line);
  if (auto smooth = head.find("moduli_smooth")) f.moduli_smooth = to_bool(*smooth, "moduli_smooth");
  head.check_all_used();

  f.surface = parse_surface(doc.require("surface"));

  std::vector<Section*> comp_sections;
  for (int i = 0;; ++i) {
    Section* s = doc.find("component", std::to_string(i));
    if (!s) break;
    comp_sections.push_back(s);
  }
  if (comp_sections.empty()) throw line_error("missing section [component 0]", 0);

  std::optional<GluedDivisor> divisor;
  if (Section* ds = doc.find("divisor")) {
    GluedDivisor d;
    const Entry& v = ds->get("variety");
    d.ring = doc.variety(v.value, v.line).ring;
    const Entry& fwd = ds->get("to_moduli");
    const Entry& inv = ds->get("from_moduli");
    d.to_moduli = at_line(fwd, [&] {
      return Pushforward::isomorphism(RingMap::from_text(d.ring, f.moduli.ring, parse_pairs(fwd)),
                                      RingMap::from_text(f.moduli.ring, d.ring, parse_pairs(inv)));
    });
    ds->check_all_used();
    divisor = std::move(d);
  }

  for (Section* s : comp_sections) {
    CurveFamilyComponent c;
    const Entry& total = s->get("total");
    c.total = doc.variety(total.value, total.line);
    c.surface_component = to_int(s->get("surface_component"), "surface_component");
    if (c.surface_component < 0 || c.surface_component >= f.surface.rank()) {
      throw DomainError("inconsistent setup: " + s->title() + " names a missing surface component");
    }
    const Entry& proj = s->get("projection");
    const Entry& base = s->get("base");
    auto w = words(proj.value);
    if (w.size() == 2 && w[0] == "bundle") {
      c.projection = at_line(proj, [&] {
        return Pushforward::projective_bundle(c.total.ring, w[1], f.moduli.ring, parse_pairs(base));
      });
    } else if (w.size() >= 2 && w[0] == "product") {
      std::vector<std::string> integrated(w.begin() + 1, w.end());
      c.projection = at_line(proj, [&] {
        return Pushforward::product_projection(c.total.ring, integrated, f.moduli.ring, parse_pairs(base));
      });
    } else {
      throw line_error("projection must be 'bundle VAR' or 'product VAR...'", proj.line);
    }
    if (auto rt = s->find("rel_tangent")) {
      c.rel_tangent = KClass(at_line(*rt, [&] { return c.total.cls(rt->value); }));
    } else if (c.projection.kind() == PushforwardKind::ProjectiveBundle) {
      c.rel_tangent = c.projection.relative_tangent();
    } else {
      throw line_error("missing key 'rel_tangent' in " + s->title(), s->line);
    }
    const Entry& sp = s->get("surface_pullback");
    c.surface_pullback = at_line(sp, [&] {
      return RingMap::from_text(f.surface.components[c.surface_component].variety.ring, c.total.ring,
                                parse_pairs(sp));
    });
    auto dclass = s->find("divisor");
    auto restrict = s->find("restrict");
    if (divisor) {
      if (!dclass || !restrict) throw line_error("component needs 'divisor' and 'restrict' keys", s->line);
      divisor->class_in.push_back(at_line(*dclass, [&] { return c.total.cls(dclass->value); }));
      divisor->restrict_from.push_back(
          at_line(*restrict, [&] { return RingMap::from_text(c.total.ring, divisor->ring, parse_pairs(*restrict)); }));
    }
    s->check_all_used();
    f.components.push_back(std::move(c));
  }
  f.divisor = std::move(divisor);

  if (Section* sc = doc.find("sheaf_characters")) {
    f.sheaf_characters.assign(f.surface.rank(), std::nullopt);
    for (int i = 0; i < f.surface.rank(); ++i) {
      if (auto e = sc->find(std::to_string(i))) {
        f.sheaf_characters[i] = KClass(at_line(*e, [&] { return f.surface.components[i].variety.cls(e->value); }));
      }
    }
    sc->check_all_used();
  }

  if (Section* sm = doc.find("sheaf_moduli")) {
    SheafModuli mod;
    const Entry& v = sm->get("variety");
    mod.space = doc.variety(v.value, v.line);
    mod.label = f.curve_class_label;
    mod.hilbert_chow_embedding = to_bool(sm->get("hilbert_chow_embedding"), "hilbert_chow_embedding");
    if (auto p = sm->find("polarization")) mod.polarization = p->value;
    if (auto p = sm->find("primitive")) out.primitive = to_bool(*p, "primitive");
    sm->check_all_used();
    out.sheaf_moduli = std::move(mod);
  }

  for (auto& s : doc.sections()) {
    static const std::set<std::string> kinds{"setup", "variety", "surface", "component", "divisor",
                                              "sheaf_characters", "sheaf_moduli"};
    if (!kinds.count(s.kind)) throw line_error("unknown section " + s.title(), s.line);
    if (s.kind == "component" &&
        std::find(comp_sections.begin(), comp_sections.end(), &s) == comp_sections.end()) {
      throw line_error("component sections must be numbered 0, 1, ...", s.line);
    }
  }
  validate(f);
  return out;
}

SetupDocument load_setup(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open setup file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_setup(buf.str());
}

namespace {

std::string map_text(const RingMap& map) {
  std::string out;
  const auto& vars = map.source()->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i].name + "=" + map.images()[i].to_string();
  }
  return out;
}

void write_variety(std::ostream& out, const std::string& name, const Variety& v) {
  const auto& ring = *v.ring;
  out << "[variety " << name << "]\n";
  out << "label = " << v.label << "\n";
  out << "variables = ";
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i) out << ", ";
    out << ring.variables()[i].name;
    if (ring.variables()[i].degree != 1) out << ":" << ring.variables()[i].degree;
  }
  out << "\nrelations = ";
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i) out << "; ";
    const auto& r = ring.rule_for(static_cast<int>(i));
    out << ring.variables()[i].name << "^" << r.power << " = " << terms_to_string(ring, r.replacement);
  }
  out << "\ndim = " << ring.dim() << "\n";
  out << "point = " << ring.monomial_to_string(ring.point_monomial()) << "\n";
  out << "tangent_ch = " << v.tangent_ch.to_string() << "\n\n";
}

std::string base_text(const Pushforward& pf) {
  std::string out;
  const auto& src = pf.source()->variables();
  const auto& tgt = pf.target()->variables();
  bool first = true;
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    for (std::size_t s = 0; s < src.size(); ++s) {
      if (pf.base_index()[s] != static_cast<int>(t)) continue;
      if (!first) out += ", ";
      out += tgt[t].name + "=" + src[s].name;
      first = false;
    }
  }
  return out;
}

}  // namespace

std::string serialize_setup(const SetupDocument& doc) {
  const FamilySetup& f = doc.family;
  std::ostringstream out;
  out << "[setup]\n";
  out << "name = " << f.name << "\n";
  out << "curve_class = " << f.curve_class_label << "\n";
  out << "moduli = M\n";
  out << "moduli_smooth = " << (f.moduli_smooth ? "true" : "false") << "\n\n";

  write_variety(out, "M", f.moduli);
  if (f.divisor) {
    const auto& iso = f.divisor->to_moduli;
    write_variety(out, "D", make_variety(f.divisor->ring, KClass(iso.pull(f.moduli.tangent_ch.ch())), "D"));
  }
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    write_variety(out, "C" + std::to_string(i), f.components[i].total);
  }
  std::string sheaf_space = "M";
  if (doc.sheaf_moduli && !same_ring(doc.sheaf_moduli->space.ring, f.moduli.ring)) {
    sheaf_space = "N";
    write_variety(out, sheaf_space, doc.sheaf_moduli->space);
  }

  out << "[surface]\ncomponents = ";
  for (int i = 0; i < f.surface.rank(); ++i) out << (i ? ", " : "") << f.surface.components[i].type.to_string();
  out << "\n";
  for (int i = 0; i < f.surface.rank(); ++i) {
    const auto& curves = f.surface.components[i].boundary_curves;
    if (curves.empty()) continue;
    out << "boundary." << i << " = ";
    for (std::size_t k = 0; k < curves.size(); ++k) out << (k ? "; " : "") << curves[k].cls.to_string();
    out << "\n";
  }
  if (!f.surface.gluings.empty()) {
    out << "gluing = ";
    for (std::size_t k = 0; k < f.surface.gluings.size(); ++k) {
      const auto& g = f.surface.gluings[k];
      out << (k ? "; " : "") << g.component_i << "." << g.curve_i << " ~ " << g.component_j << "." << g.curve_j;
    }
    out << "\n";
  }
  out << "\n";

  if (f.divisor) {
    const auto& fwd = f.divisor->to_moduli.forward_map();
    out << "[divisor]\nvariety = D\n";
    out << "to_moduli = " << map_text(*fwd) << "\n";
    out << "from_moduli = " << map_text(f.divisor->to_moduli.pullback_map()) << "\n\n";
  }

  for (std::size_t i = 0; i < f.components.size(); ++i) {
    const auto& c = f.components[i];
    out << "[component " << i << "]\n";
    out << "total = C" << i << "\n";
    out << "surface_component = " << c.surface_component << "\n";
    if (c.projection.kind() == PushforwardKind::ProjectiveBundle) {
      out << "projection = bundle " << c.total.ring->variables()[c.projection.fiber_variable()].name << "\n";
    } else if (c.projection.kind() == PushforwardKind::ProductProjection) {
      out << "projection = product";
      for (int v : c.projection.integrated_variables()) out << " " << c.total.ring->variables()[v].name;
      out << "\n";
    } else {
      throw DomainError("cannot serialize an isomorphism as a curve family projection");
    }
    out << "base = " << base_text(c.projection) << "\n";
    out << "rel_tangent = " << c.rel_tangent.to_string() << "\n";
    out << "surface_pullback = " << map_text(c.surface_pullback) << "\n";
    if (f.divisor) {
      out << "divisor = " << f.divisor->class_in[i].to_string() << "\n";
      out << "restrict = " << map_text(f.divisor->restrict_from[i]) << "\n";
    }
    out << "\n";
  }

  bool any_sheaf = std::any_of(f.sheaf_characters.begin(), f.sheaf_characters.end(),
                               [](const auto& k) { return k.has_value(); });
  if (any_sheaf) {
    out << "[sheaf_characters]\n";
    for (std::size_t i = 0; i < f.sheaf_characters.size(); ++i) {
      if (f.sheaf_characters[i]) out << i << " = " << f.sheaf_characters[i]->to_string() << "\n";
    }
    out << "\n";
  }

  if (doc.sheaf_moduli) {
    out << "[sheaf_moduli]\n";
    out << "variety = " << sheaf_space << "\n";
    out << "hilbert_chow_embedding = " << (doc.sheaf_moduli->hilbert_chow_embedding ? "true" : "false") << "\n";
    out << "polarization = " << doc.sheaf_moduli->polarization << "\n";
    out << "primitive = " << (doc.primitive ? "true" : "false") << "\n";
  }
  std::string text = out.str();
  while (text.size() > 1 && text[text.size() - 1] == '\n' && text[text.size() - 2] == '\n') text.pop_back();
  return text;
}

SetupDocument builtin_document(const std::string& name) {
  SetupDocument doc;
  doc.family = builtin_example(name);
  doc.sheaf_moduli = builtin_sheaf_moduli(name);
  doc.primitive = true;
  return doc;
}

}  // namespace sncdp
