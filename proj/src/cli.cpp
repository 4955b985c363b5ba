#include "cellalg/cli.hpp"

#include <sstream>

#include "cellalg/errors.hpp"
#include "cellalg/io.hpp"

namespace cellalg {

  namespace {
    using ojson = nlohmann::ordered_json;

    struct Source {
      FiniteMonoid             monoid;
      std::optional<LoopTable> loops;
      ojson                    summary;
    };

    Source load_source(RunConfig const& cfg) {
      ojson summary;
      if (cfg.family) {
        auto fm = family(*cfg.family, cfg.n, cfg.cap);
        summary["source"] = "family";
        summary["family"] = family_name(*cfg.family);
        summary["n"]      = cfg.n;
        return {std::move(fm.monoid), std::move(fm.loops), std::move(summary)};
      }
      FiniteMonoid m = monoid_from_json(read_json_file(*cfg.cayley_path));
      if (m.size() > cfg.cap) {
        throw SizeCapExceeded("monoid has " + std::to_string(m.size())
                              + " elements, above the cap of " + std::to_string(cfg.cap));
      }
      std::optional<LoopTable> loops;
      if (cfg.loops_path) {
        loops = loops_from_json(read_json_file(*cfg.loops_path), m.size());
      }
      summary["source"] = "cayley";
      return {std::move(m), std::move(loops), std::move(summary)};
    }

    StructureOptions structure_options(RunConfig const& cfg) {
      StructureOptions opts;
      for (auto const& [d, path] : cfg.group_data) {
        opts.custom.emplace(d, read_json_file(path));
      }
      return opts;
    }

    ojson monoid_json(Source const& src) {
      ojson j = src.summary;
      j["size"]        = src.monoid.size();
      j["idempotents"] = idempotents(src.monoid).size();
      j["regular"]     = is_regular(src.monoid);
      j["inverse"]     = is_inverse(src.monoid);
      return j;
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string render_dclasses(MonoidCellDatum const& d) {
      std::ostringstream out;
      for (std::size_t k = 0; k < d.dclasses.size(); ++k) {
        auto const& dc = d.dclasses[k];
        out << "D" << k << ": " << dc.box.num_rows() << " x " << dc.box.num_cols()
            << " egg-box, H-classes of size " << dc.box.h_size() << ", base element "
            << d.monoid.label(dc.box.gamma) << ", group " << group_kind_name(dc.gdata.kind);
        if (dc.gdata.kind == GroupKind::symmetric) {
          out << " S_" << dc.gdata.degree;
        }
        out << " (order " << dc.group.order() << ")"
            << (dc.bijection ? ", bijection condition holds" : "") << "\n";
        for (auto const& row : dc.matched) {
          out << "    ";
          for (auto const& cell : row) {
            out << (cell ? '*' : '.');
          }
          out << "\n";
        }
      }
      return out.str();
    }

    std::string render_analysis(MonoidCellDatum const& d, Analysis const& a) {
      std::ostringstream out;
      for (auto const& nr : a.nodes) {
        out << "node " << d.datum.node(nr.node).name << ": Gram " << nr.gram.rows() << " x "
            << nr.gram.cols() << ", rank " << nr.rank << (nr.in_lambda0 ? "" : " (not in Lambda_0)")
            << "\n";
      }
      out << "quasi-hereditary: " << yes_no(a.quasi_hereditary) << "\n";
      out << "semisimple: " << yes_no(a.semisimple) << " (sum of squared dimensions "
          << a.sum_dims_squared << ", size " << d.monoid.size() << ")\n";
      return out.str();
    }

    std::string render_checks(std::vector<CheckResult> const& checks) {
      std::size_t pass = 0, fail = 0, skip = 0;
      std::ostringstream failures;
      for (auto const& c : checks) {
        switch (c.status) {
          case CheckStatus::pass:
            ++pass;
            break;
          case CheckStatus::skipped:
            ++skip;
            break;
          case CheckStatus::fail:
            ++fail;
            failures << "  FAILED " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            break;
        }
      }
      std::ostringstream out;
      out << "cross-checks: " << pass << " passed, " << skip << " skipped, " << fail << " failed\n"
          << failures.str();
      return out.str();
    }

    std::string render_axioms(AxiomReport const& r, CellDatum const& d) {
      std::ostringstream out;
      out << "cell axioms (" << verify_mode_name(r.mode) << "): " << (r.ok ? "ok" : "FAILED")
          << " over " << r.checked << " acting elements\n";
      if (r.witness) {
        out << "  " << r.witness->side << " axiom, node " << d.node(r.witness->node).name
            << ", acting element " << r.witness->acting << ": " << r.witness->message << "\n";
      }
      return out.str();
    }

    std::vector<std::size_t> acting_set(RunConfig const& cfg, FiniteMonoid const& m) {
      return *cfg.verify == VerifyMode::full ? all_elements(m.size()) : greedy_generators(m);
    }

    ojson header(RunConfig const& cfg, std::string const& command, Source const& src) {
      ojson j;
      j["command"] = command;
      j["field"]   = cfg.field.to_string();
      j["monoid"]  = monoid_json(src);
      return j;
    }

    std::optional<Twisting> load_twisting(RunConfig const& cfg, Source const& src) {
      if (cfg.delta) {
        if (!src.loops) {
          throw UsageError("--delta needs a loop table (the jones family or --loops)");
        }
        return make_loop_twisting(*src.loops, Scalar::parse(*cfg.delta, cfg.field));
      }
      if (cfg.twist_file) {
        return twisting_from_json(read_json_file(*cfg.twist_file), cfg.field);
      }
      return std::nullopt;
    }

    ojson twisting_json(RunConfig const& cfg, Twisting const& pi, std::optional<TwistWitness> const& w) {
      ojson j;
      j["source"] = twist_source_name(pi.source);
      j["file"]   = cfg.twist_file ? ojson(*cfg.twist_file) : ojson(nullptr);
      j["delta"]  = pi.delta ? ojson(pi.delta->to_string()) : ojson(nullptr);
      if (w) {
        j["laws"] = {{"ok", false}, {"kind", w->kind}, {"x", w->x}, {"y", w->y}, {"z", w->z}};
      } else {
        j["laws"] = {{"ok", true}};
      }
      return j;
    }
  }  // namespace

  void validate(RunConfig const& cfg) {
    if (cfg.family.has_value() == cfg.cayley_path.has_value()) {
      throw UsageError("give exactly one of --family and --cayley");
    }
    if (cfg.family && cfg.n == 0) {
      throw UsageError("--family needs --n >= 1");
    }
    if (cfg.delta && cfg.twist_file) {
      throw UsageError("give at most one of --delta and --twist-file");
    }
    if (cfg.delta && cfg.family && *cfg.family != Family::jones) {
      throw UsageError("--delta needs a loop table; only the jones family provides one");
    }
    if (cfg.delta && cfg.cayley_path && !cfg.loops_path) {
      throw UsageError("--delta with --cayley needs --loops");
    }
    if (cfg.command == Command::twist && !cfg.delta && !cfg.twist_file) {
      throw UsageError("twist needs --delta or --twist-file");
    }
    if (cfg.command == Command::export_tables && !cfg.out_path) {
      throw UsageError("export needs --out");
    }
  }

  std::string dump_report(ojson const& report) {
    return report.dump(2) + "\n";
  }

  ojson matrix_json(DenseMatrix const& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(m(r, c).to_string());
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  ojson dclasses_json(MonoidCellDatum const& d) {
    ojson out = ojson::array();
    for (std::size_t k = 0; k < d.dclasses.size(); ++k) {
      auto const& dc = d.dclasses[k];
      auto const& gd = dc.gdata.datum;
      ojson       j;
      j["id"]          = k;
      j["size"]        = d.green.dmembers[k].size();
      j["base"]        = dc.box.gamma;
      j["base_label"]  = d.monoid.label(dc.box.gamma);
      j["rows"]        = dc.box.num_rows();
      j["cols"]        = dc.box.num_cols();
      j["h_size"]      = dc.box.h_size();
      ojson below      = ojson::array();
      for (std::size_t e = 0; e < d.dclasses.size(); ++e) {
        if (d.green.d_less(e, k)) {
          below.push_back(e);
        }
      }
      j["below"] = below;
      j["group"] = {{"order", dc.group.order()},
                    {"kind", group_kind_name(dc.gdata.kind)},
                    {"degree", dc.gdata.kind == GroupKind::custom ? ojson(nullptr) : ojson(dc.gdata.degree)}};
      ojson gnodes = ojson::array();
      for (std::size_t l = 0; l < gd.num_nodes(); ++l) {
        gnodes.push_back({{"name", gd.node(l).name},
                          {"gram", matrix_json(dc.group_grams[l])},
                          {"rank", rank(dc.group_grams[l])}});
      }
      j["group_nodes"] = gnodes;
      ojson l0         = ojson::array();
      for (auto l : dc.group_lambda0) {
        l0.push_back(gd.node(l).name);
      }
      j["group_lambda0"]    = l0;
      j["group_semisimple"] = dc.group_semisimple;
      ojson matched         = ojson::array();
      for (auto const& row : dc.matched) {
        ojson r = ojson::array();
        for (auto const& cell : row) {
          r.push_back(cell.has_value());
        }
        matched.push_back(r);
      }
      j["matched"]   = matched;
      j["bijection"] = dc.bijection.has_value();
      out.push_back(std::move(j));
    }
    return out;
  }

  ojson analysis_json(MonoidCellDatum const& d, Analysis const& a) {
    ojson j;
    ojson nodes = ojson::array();
    for (auto const& nr : a.nodes) {
      auto [dc_id, lambda] = d.source[nr.node];
      auto const& n        = d.datum.node(nr.node);
      nodes.push_back({{"name", n.name},
                       {"d", dc_id},
                       {"group_node", d.dclasses[dc_id].gdata.datum.node(lambda).name},
                       {"lsize", n.lsize},
                       {"rsize", n.rsize},
                       {"gram", matrix_json(nr.gram)},
                       {"rank", nr.rank},
                       {"in_lambda0", nr.in_lambda0}});
    }
    j["nodes"] = nodes;
    ojson l0   = ojson::array();
    for (auto k : a.lambda0) {
      l0.push_back(d.datum.node(k).name);
    }
    j["lambda0"] = l0;
    ojson dims   = ojson::object();
    for (auto [k, dim] : irreducible_dims(a)) {
      dims[d.datum.node(k).name] = dim;
    }
    j["irreducible_dims"] = dims;
    j["sum_dims_squared"] = a.sum_dims_squared;
    j["quasi_hereditary"] = a.quasi_hereditary;
    ojson failing         = ojson::array();
    for (auto k : a.qh_failing) {
      failing.push_back(d.datum.node(k).name);
    }
    j["qh_failing"] = failing;
    j["semisimple"] = a.semisimple;
    if (a.semisimple_failing) {
      auto const& nr = a.nodes[*a.semisimple_failing];
      j["semisimple_certificate"] = {{"node", d.datum.node(nr.node).name},
                                     {"rows", nr.gram.rows()},
                                     {"cols", nr.gram.cols()},
                                     {"rank", nr.rank}};
    } else {
      j["semisimple_certificate"] = nullptr;
    }
    return j;
  }

  ojson checks_json(std::vector<CheckResult> const& checks) {
    ojson out = ojson::array();
    for (auto const& c : checks) {
      out.push_back({{"name", c.name}, {"status", check_status_name(c.status)}, {"detail", c.detail}});
    }
    return out;
  }

  ojson axioms_json(AxiomReport const& r, CellDatum const& d) {
    ojson j;
    j["mode"]    = verify_mode_name(r.mode);
    j["ok"]      = r.ok;
    j["checked"] = r.checked;
    if (r.witness) {
      j["witness"] = {{"acting", r.witness->acting},
                      {"node", d.node(r.witness->node).name},
                      {"side", r.witness->side},
                      {"s", r.witness->s},
                      {"t", r.witness->t},
                      {"message", r.witness->message}};
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }

  RunResult cmd_analyze(RunConfig const& cfg) {
    Source    src = load_source(cfg);
    auto      d   = build_standard_structure(src.monoid, cfg.field, structure_options(cfg));
    auto      mult = MultiplicationOracle::monoid(d.monoid, d.field);
    Analysis  a    = analyze(d, mult);
    auto      checks = cross_check(d, a);
    RunResult result;
    result.report                 = header(cfg, "analyze", src);
    result.report["dclasses"]     = dclasses_json(d);
    result.report["analysis"]     = analysis_json(d, a);
    result.report["cross_checks"] = checks_json(checks);
    bool ok                       = all_passed(checks);
    std::string axioms_text;
    if (cfg.verify) {
      auto r                  = verify_cell_axioms(mult, d.datum, acting_set(cfg, d.monoid), *cfg.verify);
      result.report["axioms"] = axioms_json(r, d.datum);
      axioms_text             = render_axioms(r, d.datum);
      ok                      = ok && r.ok;
    } else {
      result.report["axioms"] = nullptr;
    }
    result.report["ok"] = ok;
    result.exit_code    = ok ? exit_ok : exit_check_failure;
    result.text = "monoid of size " + std::to_string(d.monoid.size()) + " over "
                  + cfg.field.to_string() + "\n" + render_dclasses(d) + render_analysis(d, a)
                  + render_checks(checks) + axioms_text;
    return result;
  }

  RunResult cmd_twist(RunConfig const& cfg) {
    Source    src = load_source(cfg);
    auto      d   = build_standard_structure(src.monoid, cfg.field, structure_options(cfg));
    Twisting  pi  = *load_twisting(cfg, src);
    RunResult result;
    result.report             = header(cfg, "twist", src);
    result.report["dclasses"] = dclasses_json(d);
    auto laws                 = verify_twisting(d.monoid, pi);
    ojson tj                  = twisting_json(cfg, pi, laws);
    if (laws) {
      result.report["twisting"] = tj;
      result.report["ok"]       = false;
      result.exit_code          = exit_check_failure;
      result.text = "not a twisting: " + laws->kind + " law fails at (" + std::to_string(laws->x)
                    + ", " + std::to_string(laws->y) + ", " + std::to_string(laws->z) + ")\n";
      return result;
    }
    auto compat           = compatibility_class(d.monoid, d.green, pi);
    tj["compatibility"]   = compatibility_name(compat.cls);
    tj["lr"]              = compat.lr;
    if (compat.witness) {
      tj["compatibility_witness"] = {{"side", compat.witness->side},
                                     {"a", compat.witness->a},
                                     {"x", compat.witness->x},
                                     {"y", compat.witness->y},
                                     {"reason", compat.witness->reason}};
    } else {
      tj["compatibility_witness"] = nullptr;
    }
    result.report["twisting"] = tj;
    if (compat.cls == Compatibility::incompatible) {
      result.report["ok"] = false;
      result.exit_code    = exit_check_failure;
      result.text         = "twisting is not compatible\n";
      return result;
    }
    auto     t      = build_twisted_cell_datum(d, pi);
    Analysis a      = twisted_analyses(t);
    auto     checks = cross_check(t, a);
    result.report["analysis"]     = analysis_json(d, a);
    result.report["cross_checks"] = checks_json(checks);
    bool        ok                = all_passed(checks);
    std::string axioms_text;
    if (cfg.verify) {
      auto r = verify_cell_axioms(t.mult, d.datum, acting_set(cfg, d.monoid), *cfg.verify);
      result.report["axioms"] = axioms_json(r, d.datum);
      axioms_text             = render_axioms(r, d.datum);
      ok                      = ok && r.ok;
    } else {
      result.report["axioms"] = nullptr;
    }
    result.report["ok"] = ok;
    result.exit_code    = ok ? exit_ok : exit_check_failure;
    result.text = "twisted monoid algebra of size " + std::to_string(d.monoid.size()) + " over "
                  + cfg.field.to_string() + ", twisting " + compatibility_name(compat.cls)
                  + (compat.lr ? " (LR)" : "") + "\n" + render_dclasses(d) + render_analysis(d, a)
                  + render_checks(checks) + axioms_text;
    return result;
  }

  RunResult cmd_verify(RunConfig const& cfg) {
    Source    src = load_source(cfg);
    RunResult result;
    result.report = header(cfg, "verify", src);
    std::optional<MonoidCellDatum> d;
    try {
      d = build_standard_structure(src.monoid, cfg.field, structure_options(cfg));
    } catch (AxiomViolation const& e) {
      result.report["axioms"] = {{"ok", false}, {"error", e.what()}};
      result.report["ok"]     = false;
      result.exit_code        = exit_check_failure;
      result.text             = std::string("group datum rejected: ") + e.what() + "\n";
      return result;
    }
    auto pi   = load_twisting(cfg, src);
    auto mult = MultiplicationOracle::monoid(d->monoid, d->field);
    if (pi) {
      mult                      = build_twisted_cell_datum(*d, *pi).mult;
      result.report["twisting"] = twisting_json(cfg, *pi, std::nullopt);
    }
    if (!cfg.verify) {
      result.report["axioms"] = nullptr;
      result.report["ok"]     = true;
      result.text             = "verification is off\n";
      return result;
    }
    auto r                  = verify_cell_axioms(mult, d->datum, acting_set(cfg, d->monoid), *cfg.verify);
    result.report["axioms"] = axioms_json(r, d->datum);
    result.report["ok"]     = r.ok;
    result.exit_code        = r.ok ? exit_ok : exit_check_failure;
    result.text             = render_axioms(r, d->datum);
    return result;
  }

  RunResult cmd_export(RunConfig const& cfg) {
    Source src = load_source(cfg);
    write_text_file(*cfg.out_path, dump_report(monoid_to_json(src.monoid)));
    if (cfg.loops_out_path) {
      if (!src.loops) {
        throw UsageError("this monoid has no loop table");
      }
      write_text_file(*cfg.loops_out_path, dump_report(loops_to_json(*src.loops)));
    }
    RunResult result;
    result.report = header(cfg, "export", src);
    result.text   = "wrote " + *cfg.out_path + "\n";
    return result;
  }

  RunResult run(RunConfig const& cfg) {
    validate(cfg);
    RunResult result;
    switch (cfg.command) {
      case Command::analyze:
        result = cmd_analyze(cfg);
        break;
      case Command::twist:
        result = cmd_twist(cfg);
        break;
      case Command::verify:
        result = cmd_verify(cfg);
        break;
      case Command::export_tables:
        result = cmd_export(cfg);
        break;
    }
    if (cfg.report_path) {
      write_text_file(*cfg.report_path, dump_report(result.report));
    }
    return result;
  }

}  // namespace cellalg
