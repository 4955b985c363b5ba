#include "cellalg/crosscheck.hpp"

#include "cellalg/verify.hpp"

namespace cellalg {

  std::string check_status_name(CheckStatus s) {
    switch (s) {
      case CheckStatus::pass:
        return "pass";
      case CheckStatus::fail:
        return "fail";
      case CheckStatus::skipped:
        return "skipped";
    }
    return "";
  }

  bool all_passed(std::vector<CheckResult> const& checks) {
    for (auto const& c : checks) {
      if (c.status == CheckStatus::fail) {
        return false;
      }
    }
    return true;
  }

  namespace {
    CheckResult verdict(std::string name, bool ok, std::string detail = "") {
      return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
    }

    CheckResult skipped(std::string name, std::string detail) {
      return {std::move(name), CheckStatus::skipped, std::move(detail)};
    }

    std::string node_name(MonoidCellDatum const& d, std::size_t node) {
      return d.datum.node(node).name;
    }

    // Checks shared by the untwisted and twisted algebras. group_level
    // enables the implications that need nonzero scales on matched pairs.
    std::vector<CheckResult> common_checks(MonoidCellDatum const& d, Analysis const& a,
                                           MultiplicationOracle const& mult, bool group_level) {
      std::vector<CheckResult> out;
      std::size_t const        size = d.monoid.size();

      std::size_t basis_count = 0;
      for (auto const& n : d.datum.nodes()) {
        basis_count += n.lsize * n.rsize;
      }
      out.push_back(verdict("basis_count", basis_count == size,
                            std::to_string(basis_count) + " basis vectors for "
                                + std::to_string(size) + " elements"));

      std::string bracket_failure;
      for (std::size_t node = 0; node < d.num_nodes() && bracket_failure.empty(); ++node) {
        if (auto f = check_bracket(mult, d.datum, node, false)) {
          bracket_failure = *f;
        }
      }
      out.push_back(verdict("bracket_reference_independence", bracket_failure.empty(), bracket_failure));

      std::string unmatched;
      for (auto const& nr : a.nodes) {
        auto [dc_id, lambda] = d.source[nr.node];
        auto const& dc       = d.dclasses[dc_id];
        auto const& gn       = dc.gdata.datum.node(lambda);
        for (std::size_t r = 0; r < nr.gram.rows() && unmatched.empty(); ++r) {
          for (std::size_t c = 0; c < nr.gram.cols() && unmatched.empty(); ++c) {
            bool is_matched = dc.matched[c / gn.lsize][r / gn.rsize].has_value();
            if (!is_matched && !nr.gram(r, c).is_zero()) {
              unmatched = "nonzero entry on an unmatched block of " + node_name(d, nr.node);
            }
          }
        }
      }
      out.push_back(verdict("unmatched_blocks_zero", unmatched.empty(), unmatched));

      std::string lifted;
      for (auto const& nr : a.nodes) {
        auto [dc_id, lambda] = d.source[nr.node];
        auto const& gram_d   = d.dclasses[dc_id].group_grams[lambda];
        std::size_t rd       = rank(gram_d);
        if (rd < gram_d.cols() && !(nr.rank < nr.gram.cols())) {
          lifted = "group left radical does not lift at " + node_name(d, nr.node);
        }
        if (rd < gram_d.rows() && !(nr.rank < nr.gram.rows())) {
          lifted = "group right radical does not lift at " + node_name(d, nr.node);
        }
      }
      out.push_back(verdict("group_radical_lifts", lifted.empty(), lifted));

      out.push_back(verdict("dimension_count_iff_semisimple",
                            (a.sum_dims_squared == size) == a.semisimple,
                            "sum of squared dimensions " + std::to_string(a.sum_dims_squared)
                                + ", size " + std::to_string(size)));
      out.push_back(verdict("semisimple_implies_quasi_hereditary",
                            !a.semisimple || a.quasi_hereditary));

      if (mult.field().is_rationals()) {
        bool trace = trace_form_semisimple(mult);
        out.push_back(verdict("trace_form_agrees", trace == a.semisimple,
                              std::string("trace form says ")
                                  + (trace ? "semisimple" : "not semisimple")));
      } else {
        out.push_back(skipped("trace_form_agrees", "trace form needs characteristic zero"));
      }

      bool groups_semisimple = true, groups_full_lambda0 = true, every_matched = true,
           every_bijection = true;
      for (auto const& dc : d.dclasses) {
        groups_semisimple   = groups_semisimple && dc.group_semisimple;
        groups_full_lambda0 = groups_full_lambda0
                              && dc.group_lambda0.size() == dc.gdata.datum.num_nodes();
        every_matched   = every_matched && dc.has_matched;
        every_bijection = every_bijection && dc.bijection.has_value();
      }
      std::string const need_strong = "requires nonzero scales on matched pairs";
      if (!group_level) {
        for (auto name : {"group_nonsemisimple_forces_nonsemisimple",
                          "inverse_monoid_semisimplicity", "bijection_and_group_semisimple",
                          "matched_and_group_lambda0_implies_qh",
                          "regular_and_group_lambda0_implies_qh"}) {
          out.push_back(skipped(name, need_strong));
        }
        return out;
      }
      out.push_back(verdict("group_nonsemisimple_forces_nonsemisimple",
                            groups_semisimple || !a.semisimple));
      if (is_inverse(d.monoid)) {
        out.push_back(verdict("inverse_monoid_semisimplicity", groups_semisimple == a.semisimple,
                              std::string("group level says ")
                                  + (groups_semisimple ? "semisimple" : "not semisimple")));
      } else {
        out.push_back(skipped("inverse_monoid_semisimplicity", "monoid is not inverse"));
      }
      if (groups_semisimple && every_bijection) {
        out.push_back(verdict("bijection_and_group_semisimple", a.semisimple));
      } else {
        out.push_back(skipped("bijection_and_group_semisimple", "hypotheses not met"));
      }
      if (every_matched && groups_full_lambda0) {
        out.push_back(verdict("matched_and_group_lambda0_implies_qh", a.quasi_hereditary));
      } else {
        out.push_back(skipped("matched_and_group_lambda0_implies_qh", "hypotheses not met"));
      }
      if (is_regular(d.monoid) && groups_full_lambda0) {
        out.push_back(verdict("regular_and_group_lambda0_implies_qh", a.quasi_hereditary));
      } else {
        out.push_back(skipped("regular_and_group_lambda0_implies_qh", "hypotheses not met"));
      }
      return out;
    }

    std::string first_gram_difference(MonoidCellDatum const& d, Analysis const& a,
                                      auto&& fast) {
      for (auto const& nr : a.nodes) {
        if (!(fast(nr.node) == nr.gram)) {
          return "Gram matrices differ at " + node_name(d, nr.node);
        }
      }
      return "";
    }
  }  // namespace

  std::vector<CheckResult> cross_check(MonoidCellDatum const& d, Analysis const& a) {
    auto mult = MultiplicationOracle::monoid(d.monoid, d.field);
    std::vector<CheckResult> out;
    auto diff = first_gram_difference(d, a, [&d](std::size_t node) { return gram_fast(d, node); });
    out.push_back(verdict("gram_fast_matches_definition", diff.empty(), diff));
    out.push_back(verdict("lambda0_routes_agree", lambda0_via_groups(d) == a.lambda0));
    auto rest = common_checks(d, a, mult, true);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

  std::vector<CheckResult> cross_check(TwistedCellDatum const& t, Analysis const& a) {
    auto const& d      = *t.base;
    bool const  strong = t.compatibility.cls == Compatibility::strongly_compatible;
    std::vector<CheckResult> out;
    auto diff = first_gram_difference(d, a, [&t](std::size_t node) { return scaled_gram(t, node); });
    out.push_back(verdict("scaled_bracket_identity", diff.empty(), diff));
    out.push_back(verdict("lambda0_routes_agree", twisted_lambda0_via_groups(t) == a.lambda0));
    if (strong) {
      out.push_back(verdict("lambda0_matches_group_level", lambda0_via_groups(d) == a.lambda0));
    } else {
      out.push_back(skipped("lambda0_matches_group_level", "requires nonzero scales on matched pairs"));
    }
    auto rest = common_checks(d, a, t.mult, strong);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

}  // namespace cellalg
