#include "lyk/io/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "lyk/cohomology.hpp"
#include "lyk/errors.hpp"
#include "lyk/io/report_doc.hpp"
#include "lyk/io/workspace.hpp"
#include "lyk/wells.hpp"

namespace lyk::io {

namespace {

struct Options {
  std::string file;
  std::vector<std::string> names;
  std::uint64_t budget = kDefaultBudget;
  std::string field;
  std::string phi;
  bool json = false;
  bool timing = false;
  bool serial = false;
  bool bases = false;
};

struct Outcome {
  ReportDoc doc;
  int code = kOk;
  std::string document;  // workspace text for extend / extract
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Exec exec_of(const Options& o) { return o.serial ? Exec::serial : Exec::parallel; }

const std::string& name_at(const Options& o, std::size_t k, const char* what) {
  if (o.names.size() <= k) throw UsageError(std::string("missing ") + what);
  return o.names[k];
}

void arity(const Options& o, std::size_t n) {
  if (o.names.size() > n) throw UsageError("unexpected argument '" + o.names[n] + "'");
}

const Matrix& map_named(const Workspace& w, const std::string& name) {
  if (!w.has(Kind::map, name)) throw UsageError("unknown map '" + name + "'");
  return w.maps.at(name);
}

// A cocycle named directly or extracted from an extension of that name.
NonAbCocycle cocycle_named(const Workspace& w, const std::string& name) {
  if (w.has(Kind::cocycle, name)) return w.cocycles.at(name).cocycle;
  if (w.has(Kind::extension, name)) return extract_cocycle(w.extension(name));
  throw UsageError("no cocycle or extension named '" + name + "'");
}

ExtensionSpec extension_named(const Workspace& w, const std::string& name) {
  if (!w.has(Kind::extension, name)) throw UsageError("unknown extension '" + name + "'");
  return w.extension(name);
}

AutoPair pair_named(const Workspace& w, const std::string& name) {
  if (!w.has(Kind::pair, name)) throw UsageError("unknown pair '" + name + "'");
  return w.pair(name);
}

std::string ok_or_fails(bool ok) { return ok ? "ok" : "fails"; }

// ------------------------------------------------------------------ commands

Outcome cmd_validate(const Workspace& w, const Options& o) {
  Outcome r;
  std::vector<std::pair<Kind, std::string>> items;
  if (o.names.empty()) {
    items = w.order;
  } else {
    for (const auto& n : o.names) {
      const auto kinds = w.kinds_of(n);
      if (kinds.empty()) throw UsageError("nothing named '" + n + "'");
      for (Kind k : kinds) items.emplace_back(k, n);
    }
  }
  bool ok = true;
  int checked = 0;
  const CheckOptions opts{exec_of(o), kDefaultWitnessLimit};
  for (const auto& [kind, name] : items) {
    const std::string scope = to_string(kind) + " " + name;
    Report rep;
    switch (kind) {
      case Kind::algebra:
        rep = verify_ly(w.algebras.at(name), opts);
        break;
      case Kind::rep:
        rep = verify_representation(w.reps.at(name).rep, opts);
        break;
      case Kind::cocycle:
        rep = validate_cocycle(w.cocycles.at(name).cocycle, opts);
        break;
      case Kind::extension: {
        const ExtensionDecl& d = w.extensions.at(name);
        if (!d.cocycle.empty()) {
          rep = validate_cocycle(w.cocycles.at(d.cocycle).cocycle, opts);
          rep.merge(verify_ly(build_extension(w.cocycles.at(d.cocycle).cocycle).total, opts), "total:");
          break;
        }
        try {
          ExtensionSpec e = w.extension(name);
          rep = verify_ly(e.total, opts);
          rep.merge(verify_ly(e.g, opts), "g:");
          rep.merge(verify_ly(e.h, opts), "h:");
        } catch (const InvalidExtension& e) {
          rep.add("extension", {});
          rep.note(e.what());
        } catch (const SectionMismatch& e) {
          rep.add("section", {});
          rep.note(e.what());
        }
        break;
      }
      case Kind::map:
      case Kind::pair:
        continue;
    }
    ++checked;
    r.doc.fact(scope, ok_or_fails(rep.ok()));
    r.doc.add_report(scope, rep);
    ok = ok && rep.ok();
  }
  r.doc.fact("checked", std::to_string(checked));
  r.doc.verdict = ok_or_fails(ok);
  r.code = ok ? kOk : kFails;
  return r;
}

std::vector<std::string> cochain_lines(const std::string& key, const MultiMap& m) {
  std::vector<std::string> out;
  for (std::size_t off = 0; off < m.domain_size(); ++off) {
    const auto t = m.unravel(off);
    const Vec v = m.value(t);
    if (is_zero(v)) continue;
    std::string line = key + "[";
    for (std::size_t k = 0; k < t.size(); ++k) line += (k ? "," : "") + std::to_string(t[k] + 1);
    line += "] =";
    for (const auto& s : v) line += " " + s.str();
    out.push_back(line);
  }
  if (out.empty()) out.push_back(key + " = 0");
  return out;
}

Outcome cmd_cohomology(const Workspace& w, const Options& o) {
  const std::string& name = name_at(o, 0, "representation name");
  arity(o, 1);
  if (!w.has(Kind::rep, name)) throw UsageError("unknown rep '" + name + "'");
  const Representation& rep = w.reps.at(name).rep;
  Outcome r;
  Report v = verify_representation(rep);
  r.doc.add_report("rep " + name, v);
  if (!v.ok()) {
    r.doc.verdict = "fails";
    r.code = kFails;
    return r;
  }
  const H1Result a = h1(rep, exec_of(o));
  const H23Result b = z23_b23_h23(rep, exec_of(o));
  r.doc.fact("dim_g", std::to_string(rep.algebra.dim));
  r.doc.fact("dim_v", std::to_string(rep.dim_v));
  r.doc.fact("H1", std::to_string(a.dim));
  r.doc.fact("Z23", std::to_string(b.dim_z));
  r.doc.fact("B23", std::to_string(b.dim_b));
  r.doc.fact("H23", std::to_string(b.dim_h));
  if (o.bases) {
    for (std::size_t k = 0; k < a.basis.size(); ++k)
      r.doc.add_matrix("H1 basis " + std::to_string(k + 1), Matrix::from_multimap(a.basis[k]));
    for (std::size_t k = 0; k < b.h_representatives.size(); ++k) {
      ReportDoc::Block blk{"H23 representative " + std::to_string(k + 1), cochain_lines("f", b.h_representatives[k].f)};
      for (auto& l : cochain_lines("g", b.h_representatives[k].g)) blk.lines.push_back(l);
      r.doc.blocks.push_back(std::move(blk));
    }
  }
  r.doc.verdict = "ok";
  return r;
}

Outcome cmd_extend(const Workspace& w, const Options& o) {
  const std::string& name = name_at(o, 0, "cocycle name");
  arity(o, 1);
  if (!w.has(Kind::cocycle, name)) throw UsageError("unknown cocycle '" + name + "'");
  const CocycleDecl& d = w.cocycles.at(name);
  Outcome r;
  Report v = validate_cocycle(d.cocycle);
  ExtensionSpec e = build_extension(d.cocycle);
  if (!v.ok()) {
    r.doc.add_report("cocycle " + name, v);
    r.doc.add_report("total", verify_ly(e.total));
    r.doc.verdict = "fails";
    r.code = kFails;
    return r;
  }
  Workspace out;
  out.field = w.field;
  out.add_algebra(d.g, d.cocycle.g);
  if (d.h != d.g) out.add_algebra(d.h, d.cocycle.h);
  out.add_algebra(name + "_total", e.total);
  out.add_map(name + "_i", e.i);
  out.add_map(name + "_p", e.p);
  out.add_map(name + "_s", e.s);
  out.add_extension(name, {"", d.g, d.h, name + "_total", name + "_i", name + "_p", name + "_s"});
  r.document = print_workspace(out);
  r.doc.verdict = "ok";
  r.doc.fact("dim_total", std::to_string(e.total.dim));
  return r;
}

Outcome cmd_extract(const Workspace& w, const Options& o) {
  const std::string& name = name_at(o, 0, "extension name");
  arity(o, 1);
  const ExtensionSpec e = extension_named(w, name);
  const ExtensionDecl& d = w.extensions.at(name);
  std::string gname = d.g, hname = d.h;
  if (!d.cocycle.empty()) {
    gname = w.cocycles.at(d.cocycle).g;
    hname = w.cocycles.at(d.cocycle).h;
  }
  Outcome r;
  const NonAbCocycle c = extract_cocycle(e);
  Report v = validate_cocycle(c);
  r.doc.add_report("cocycle " + name, v);
  Workspace out;
  out.field = w.field;
  out.add_algebra(gname, e.g);
  if (hname != gname) out.add_algebra(hname, e.h);
  out.add_cocycle(name, {gname, hname, c});
  r.document = print_workspace(out);
  r.doc.verdict = ok_or_fails(v.ok());
  r.code = v.ok() ? kOk : kFails;
  return r;
}

Outcome cmd_equiv(const Workspace& w, const Options& o) {
  const std::string& a = name_at(o, 0, "first cocycle");
  const std::string& b = name_at(o, 1, "second cocycle");
  arity(o, 2);
  const NonAbCocycle c1 = cocycle_named(w, a), c2 = cocycle_named(w, b);
  Outcome r;
  if (!o.phi.empty()) {
    Report v = check_cocycle_equivalence(c1, c2, map_named(w, o.phi));
    r.doc.add_report("equivalence", v);
    r.doc.verdict = v.ok() ? "equivalent" : "fails";
    r.code = v.ok() ? kOk : kFails;
    return r;
  }
  const EquivalenceSearch s = search_equivalence(c1, c2, o.budget, exec_of(o));
  r.doc.fact("method", s.method);
  r.doc.fact("examined", std::to_string(s.examined));
  switch (s.status) {
    case EquivalenceSearch::Status::witness:
      r.doc.verdict = "equivalent";
      r.doc.add_matrix("phi", *s.phi);
      break;
    case EquivalenceSearch::Status::not_equivalent:
      r.doc.verdict = "not_equivalent";
      r.code = kFails;
      break;
    case EquivalenceSearch::Status::exhausted:
      r.doc.verdict = "undecided";
      r.code = kUndecided;
      break;
  }
  return r;
}

void abelian_facts(ReportDoc& doc, const ExtensionSpec& e, const AutoPair& pr) {
  try {
    const AbelianMode m = abelian_mode(e);
    const AbelianWells aw = abelian_wells(m, pr);
    doc.fact("abelian.compatible", aw.compatible ? "yes" : "no");
    if (aw.compatible) doc.fact("abelian.coboundary", aw.trivial ? "yes" : "no");
  } catch (const NotAbelianExtension&) {
  }
}

Outcome cmd_wells(const Workspace& w, const Options& o) {
  const ExtensionSpec e = extension_named(w, name_at(o, 0, "extension name"));
  const AutoPair pr = pair_named(w, name_at(o, 1, "pair name"));
  arity(o, 2);
  Outcome r;
  Report pv = verify_pair(e.g, e.h, pr);
  r.doc.add_report("pair", pv);
  if (!pv.ok()) {
    r.doc.verdict = "fails";
    r.code = kFails;
    return r;
  }
  const WellsObstruction wo = wells_map(e, pr, o.budget, exec_of(o));
  r.doc.verdict = to_string(wo.status);
  r.doc.fact("method", wo.method);
  abelian_facts(r.doc, e, pr);
  if (wo.psi) r.doc.add_matrix("psi", *wo.psi);
  if (wo.phi) r.doc.add_matrix("phi", *wo.phi);
  r.code = wo.status == WellsObstruction::Status::trivial      ? kOk
           : wo.status == WellsObstruction::Status::nontrivial ? kFails
                                                               : kUndecided;
  return r;
}

Outcome cmd_extensible(const Workspace& w, const Options& o) {
  const ExtensionSpec e = extension_named(w, name_at(o, 0, "extension name"));
  const AutoPair pr = pair_named(w, name_at(o, 1, "pair name"));
  arity(o, 2);
  Outcome r;
  Report pv = verify_pair(e.g, e.h, pr);
  r.doc.add_report("pair", pv);
  if (!pv.ok()) {
    r.doc.verdict = "fails";
    r.code = kFails;
    return r;
  }
  const NonAbCocycle c = extract_cocycle(e);
  if (!o.phi.empty()) {
    const Matrix& phi = map_named(w, o.phi);
    Report v = check_extensible(c, pr, phi, {exec_of(o), kDefaultWitnessLimit});
    r.doc.add_report("phi " + o.phi, v);
    r.doc.verdict = v.ok() ? "extensible" : "fails";
    r.code = v.ok() ? kOk : kFails;
    if (v.ok()) r.doc.add_matrix("gamma", lift_automorphism(e, pr, phi));
    return r;
  }
  const ExtensibilitySearch s = find_extending_phi(c, pr, o.budget, exec_of(o));
  r.doc.verdict = to_string(s.status);
  r.doc.fact("method", s.method);
  if (s.phi) {
    r.doc.add_matrix("phi", *s.phi);
    r.doc.add_matrix("gamma", lift_automorphism(e, pr, *s.phi));
  }
  r.code = s.status == ExtensibilitySearch::Status::extensible       ? kOk
           : s.status == ExtensibilitySearch::Status::not_extensible ? kFails
                                                                     : kUndecided;
  return r;
}

Outcome cmd_sequence(const Workspace& w, const Options& o) {
  const ExtensionSpec e = extension_named(w, name_at(o, 0, "extension name"));
  arity(o, 1);
  Outcome r;
  const SequenceCheck sc = wells_sequence_check(e, o.budget, exec_of(o));
  r.doc.fact("|Aut(total)|", std::to_string(sc.aut_total));
  r.doc.fact("|Aut_h(total)|", std::to_string(sc.aut_h));
  r.doc.fact("|Aut(g) x Aut(h)|", std::to_string(sc.pairs));
  r.doc.fact("|Ker K|", std::to_string(sc.ker_k));
  r.doc.fact("|Im H|", std::to_string(sc.im_h));
  r.doc.fact("|Im K|", std::to_string(sc.im_k));
  r.doc.fact("|Ker W|", std::to_string(sc.ker_w));
  r.doc.fact("|Z1_nab|", std::to_string(sc.z1));
  r.doc.add_report("sequence", sc.report);
  r.doc.verdict = sc.report.ok() ? "exact" : "fails";
  r.code = sc.report.ok() ? kOk : kFails;
  return r;
}

// Property failures a document can cause (as opposed to usage errors).
bool is_property_failure(const std::exception_ptr& p) {
  try {
    std::rethrow_exception(p);
  } catch (const InvalidExtension&) {
    return true;
  } catch (const SectionMismatch&) {
    return true;
  } catch (const NotExtensible&) {
    return true;
  } catch (const NotHPreserving&) {
    return true;
  } catch (const NotAbelianExtension&) {
    return true;
  } catch (const InternalInconsistency&) {
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Lie-Yamaguti algebras, cocycles and extensions", "lyk"};
  app.require_subcommand(1);
  Options o;
  using Command = std::function<Outcome(const Workspace&, const Options&)>;
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const std::string& name, const std::string& help, const std::string& names_help,
                 Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "workspace document")->required();
    sub->add_option("names", o.names, names_help);
    sub->add_option("--budget", o.budget, "maximum number of enumerated candidates");
    sub->add_option("--field", o.field, "read the document over Q or Fp instead");
    sub->add_flag("--json", o.json, "machine-readable report");
    sub->add_flag("--timing", o.timing, "append wall-clock time");
    sub->add_flag("--serial", o.serial, "use the serial reference kernels");
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };
  add("validate", "check axioms of the named (or all) declarations", "names", cmd_validate);
  add("cohomology", "H1 and H^(2,3) of a representation", "rep", cmd_cohomology)
      ->add_flag("--bases", o.bases, "print bases");
  add("extend", "emit the extension document of a cocycle", "cocycle", cmd_extend);
  add("extract", "emit the cocycle document of an extension", "extension", cmd_extract);
  add("equiv", "equivalence of two cocycles or extensions", "first second", cmd_equiv)
      ->add_option("--phi", o.phi, "check this map instead of searching");
  add("wells", "Wells obstruction of an automorphism pair", "extension pair", cmd_wells);
  add("extensible", "extensibility of an automorphism pair", "extension pair", cmd_extensible)
      ->add_option("--phi", o.phi, "check this map instead of searching");
  add("sequence", "exactness of the Wells sequence by enumeration", "extension", cmd_sequence);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Command fn;
  std::string command;
  for (auto& [sub, f] : commands)
    if (sub->parsed()) {
      fn = f;
      command = sub->get_name();
    }

  std::optional<Field> field;
  if (!o.field.empty()) {
    field = field_from_name(o.field);
    if (!field) {
      err << "lyk: unknown field '" << o.field << "'\n";
      return kUsage;
    }
  }
  std::ifstream in(o.file, std::ios::binary);
  if (!in) {
    err << "lyk: cannot read " << o.file << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  const auto start = std::chrono::steady_clock::now();
  Outcome r;
  try {
    const Workspace w = parse_workspace(buf.str(), field);
    try {
      r = fn(w, o);
    } catch (const BudgetExceeded& e) {
      r = Outcome{};
      r.doc.verdict = "undecided";
      r.doc.notes.push_back(e.what());
      r.code = kUndecided;
    }
  } catch (const ParseError& e) {
    err << o.file << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kUsage;
  } catch (const Error& e) {
    if (!is_property_failure(std::current_exception())) {
      err << "lyk: " << e.what() << "\n";
      return kUsage;
    }
    r = Outcome{};
    r.doc.verdict = "fails";
    r.doc.notes.push_back(e.what());
    r.code = kFails;
  }
  r.doc.command = command;
  if (o.timing)
    r.doc.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  r.doc.finalize();
  if (!r.document.empty() && !o.json) {
    out << r.document;
    if (o.timing) out << "# timing_ms " << *r.doc.timing_ms << "\n";
    return r.code;
  }
  if (!r.document.empty()) {
    ReportDoc::Block b{"document", {}};
    std::istringstream lines(r.document);
    for (std::string l; std::getline(lines, l);) b.lines.push_back(l);
    r.doc.blocks.push_back(std::move(b));
  }
  out << (o.json ? render_json(r.doc) : render_text(r.doc));
  return r.code;
}

}  // namespace lyk::io
