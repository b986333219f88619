#include <catch_amalgamated.hpp>

#include "fmc/corpus.hpp"
#include "fmc/errors.hpp"
#include "fmc/forms.hpp"
#include "fmc/search.hpp"
#include "support.hpp"

using namespace fmc;

namespace {

AlgebraSpec with_form(AlgebraSpec spec, const std::vector<BilinearForm::Entry>& entries, const std::string& name = "B") {
  spec.set_form(BilinearForm(name, spec.module, entries));
  return spec;
}

}  // namespace

TEST_CASE("hyperbolic form on the dual numbers") {
  const AlgebraSpec e1 = corpus_spec("E1");
  const auto reports = check_form(e1);
  REQUIRE(reports.size() == 3);
  CHECK(all_passed(reports));
  const auto coh = coherence_from_form(e1);
  REQUIRE(coh.size() == 2);
  CHECK(all_passed(coh));
  CHECK(check(e1, IdentityId::FormPAdjoint).passed);
}

TEST_CASE("form failures") {
  const AlgebraSpec e1 = corpus_spec("E1");
  const auto& f = e1.field();
  // B(e,f) = 1 alone is not symmetric.
  const AlgebraSpec lopsided = with_form(e1, {{0, 1, f.one()}});
  auto r = check_form(lopsided);
  CHECK_FALSE(r[0].passed);
  REQUIRE(r[0].witness);
  CHECK(r[0].witness->indices == std::vector<std::size_t>{0, 1});

  // B(e,e) = 1 is symmetric and invariant but degenerate.
  const AlgebraSpec degenerate = with_form(e1, {{0, 0, f.one()}});
  r = check_form(degenerate);
  CHECK(r[0].passed);
  CHECK(r[1].passed);
  CHECK_FALSE(r[2].passed);
  CHECK_THROWS_AS(coherence_from_form(degenerate), PreconditionFailed);
  try {
    coherence_from_form(degenerate);
  } catch (const PreconditionFailed& e) {
    CHECK_FALSE(all_passed(e.reports()));
  }
}

TEST_CASE("form binding") {
  AlgebraSpec e1 = corpus_spec("E1");
  const auto& f = e1.field();
  e1 = with_form(e1, {{0, 0, f.one()}}, "C");
  CHECK_THROWS_AS(check_form(e1), MissingInput);
  CHECK(all_passed(check_form(e1, "B")));
  CHECK_FALSE(all_passed(check_form(e1, "C")));
  CHECK_THROWS_AS(check_form(e1, "D"), MissingInput);
}

TEST_CASE("coherence needs an f-manifold algebra") {
  AlgebraSpec e1 = corpus_spec("E1");
  const auto& f = e1.field();
  auto entries = e1.product("dot").entries();
  entries.push_back({1, 1, 1, f.one()});
  e1.set_product(BilinearMap("dot", e1.module, entries));
  CHECK_THROWS_AS(coherence_from_form(e1), PreconditionFailed);
}

TEST_CASE("invariant forms give coherence on searched algebras") {
  SearchParams p;
  p.cyclic_orders = {2};
  p.root_order = 2;
  p.exponents = {{1}};
  p.dimension = 2;
  p.degrees = {{0}, {1}};
  p.target = "form-invariance";
  p.pool = {"0", "1", "-1"};
  p.trials = 400;
  p.seed = 3;
  int used = 0;
  for (const auto& spec : search(p).found) {
    if (!passes(spec, "f-manifold-color") || !all_passed(check_form(spec))) continue;
    ++used;
    CHECK(all_passed(coherence_from_form(spec)));
    CHECK(check(spec, IdentityId::FormPAdjoint).passed);
  }
  CHECK(used > 0);
}
