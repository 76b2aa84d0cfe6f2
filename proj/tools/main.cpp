#include "cindkit/runner.h"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"cindkit: exact verification of a small-cancellation family in Aut(F2) and of "
               "co-induced invariant random subgroups"};
  app.require_subcommand(1);

  cindkit::RunConfig cfg;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--output", cfg.output, "write the report to this path");
    cmd->add_option("--jobs", cfg.jobs, "worker count (default: CINDKIT_JOBS or hardware)");
    cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
  };
  auto relator_opts = [&](CLI::App* cmd) {
    cmd->add_option("--n", cfg.n, "staircase parameter of the base word");
    cmd->add_option("--L", cfg.L, "transversal truncation depth");
    cmd->add_option("--lambda", cfg.lambda, "cancellation threshold p/q");
    cmd->add_option("--relators", cfg.relators, "relator file (one word per line, # comments)");
    cmd->add_flag("--exclude-identity", cfg.exclude_identity,
                  "drop the identity representative from the orbit set");
  };

  CLI::App* words = app.add_subcommand("words", "free-group word operations");
  CLI::App* words_reduce = words->add_subcommand("reduce", "freely reduce a word");
  words_reduce->add_option("--word", cfg.word, "word in a/b text format")->required();
  common(words_reduce);
  words_reduce->callback([&] { cfg.command = "words reduce"; });

  CLI::App* auto_ = app.add_subcommand("auto", "automorphism operations");
  CLI::App* auto_apply = auto_->add_subcommand("apply", "apply an automorphism to a word");
  auto_apply->add_option("--aut", cfg.aut, "composition, e.g. \"xi phi^2\" or \"tau chi\"")
      ->required();
  auto_apply->add_option("--word", cfg.word, "word in a/b text format")->required();
  common(auto_apply);
  auto_apply->callback([&] { cfg.command = "auto apply"; });

  CLI::App* family = app.add_subcommand("family", "the sixteen-word family");
  CLI::App* family_build = family->add_subcommand("build", "build w0..w7, v0..v7");
  family_build->add_option("--n", cfg.n, "staircase parameter");
  common(family_build);
  family_build->callback([&] { cfg.command = "family build"; });

  CLI::App* sc = app.add_subcommand("sc", "small-cancellation checks");
  CLI::App* sc_check = sc->add_subcommand("check", "all-pairs C'(lambda) piece scan");
  relator_opts(sc_check);
  common(sc_check);
  sc_check->callback([&] { cfg.command = "sc check"; });
  CLI::App* sc_dehn = sc->add_subcommand("dehn", "Dehn-reduce a word against the relator set");
  sc_dehn->add_option("--word", cfg.word, "word to reduce")->required();
  relator_opts(sc_dehn);
  common(sc_dehn);
  sc_dehn->callback([&] { cfg.command = "sc dehn"; });
  CLI::App* sc_certify = sc->add_subcommand("certify", "length-based non-membership certificate");
  sc_certify->add_option("--word", cfg.word, "cyclically reduced word")->required();
  relator_opts(sc_certify);
  common(sc_certify);
  sc_certify->callback([&] { cfg.command = "sc certify"; });

  CLI::App* claims = app.add_subcommand("claims", "cancellation claim suite");
  CLI::App* claims_run = claims->add_subcommand("run", "run the numbered claims");
  claims_run->add_option("--claim", cfg.claims, "claim ids (default: all nine)");
  claims_run->add_option("--n", cfg.n, "staircase parameter");
  claims_run->add_option("--L", cfg.L, "operator truncation depth");
  claims_run->add_option("--k", cfg.k_max, "maximal exponent for phi^k / psi^k rows");
  common(claims_run);
  claims_run->callback([&] { cfg.command = "claims run"; });

  CLI::App* irs = app.add_subcommand("irs", "invariant random subgroup computations");
  CLI::App* irs_eval = irs->add_subcommand("eval", "theta(N_F) on the ambient instance");
  irs_eval->add_option("--instance", cfg.instance, "group instance spec")->required();
  irs_eval->add_option("--theta", cfg.theta, "IRS spec")->required();
  irs_eval->add_option("--set", cfg.set, "finite element set, comma separated");
  common(irs_eval);
  irs_eval->callback([&] { cfg.command = "irs eval"; });
  CLI::App* irs_coind = irs->add_subcommand("coinduce", "co-induced value on a basic clopen set");
  irs_coind->add_option("--instance", cfg.instance, "group instance spec")->required();
  irs_coind->add_option("--theta", cfg.theta, "IRS spec")->required();
  irs_coind->add_option("--set", cfg.set, "finite element set, comma separated");
  common(irs_coind);
  irs_coind->callback([&] { cfg.command = "irs coinduce"; });
  CLI::App* irs_nonatomic = irs->add_subcommand("nonatomic", "atomicity verdict for CIND(theta)");
  irs_nonatomic->add_option("--instance", cfg.instance, "group instance spec")->required();
  irs_nonatomic->add_option("--theta", cfg.theta, "IRS spec")->required();
  irs_nonatomic->add_option("--candidate", cfg.candidate, "candidate element of Gamma \\ ker");
  common(irs_nonatomic);
  irs_nonatomic->callback([&] { cfg.command = "irs nonatomic"; });
  CLI::App* irs_grid = irs->add_subcommand("grid", "parameter sweep of co-induced values");
  irs_grid->add_option("--instance", cfg.instance, "group instance spec")->required();
  irs_grid->add_option("--grid", cfg.grid, "comma-separated rational parameters")->required();
  irs_grid->add_flag("--weakmix", cfg.weakmix, "use the weakly mixing refinement");
  irs_grid->add_option("--K", cfg.K, "chain truncation depth");
  common(irs_grid);
  irs_grid->callback([&] { cfg.command = "irs grid"; });

  CLI::App* cocycle = app.add_subcommand("cocycle", "transversal cocycle laws");
  CLI::App* cocycle_check = cocycle->add_subcommand("check", "identity law and chain rule");
  cocycle_check->add_option("--instance", cfg.instance, "group instance spec")->required();
  cocycle_check->add_option("--inner", cfg.inner, "nested instance for the chain rule");
  cocycle_check->add_option("--samples", cfg.samples, "random samples");
  common(cocycle_check);
  cocycle_check->callback([&] { cfg.command = "cocycle check"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  return cindkit::run_and_emit(cfg, std::cout, std::cerr);
}
