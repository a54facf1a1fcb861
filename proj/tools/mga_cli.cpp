// mga: exact invariants of modular group algebras of finite 2-groups.
//
// Subcommands: group, filtration, census, obstruction, verify.
// Exit codes: 0 success/PASS, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mga/census.hpp"
#include "mga/filtration.hpp"
#include "mga/report.hpp"
#include "mga/specparse.hpp"
#include "mga/verify.hpp"

namespace {

using nlohmann::ordered_json;

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(outPath);
    if (!f) throw mga::Error(mga::Err::BadParameters, "cannot open output file: " + outPath);
    f << text;
  }
}

mga::PcGroup loadGroup(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream f(spec.substr(1));
    if (!f) throw mga::Error(mga::Err::BadParameters, "cannot open group file: " + spec.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    return mga::parsePcPresentation(ss.str());
  }
  return mga::parseGroupName(spec);
}

ordered_json groupInfo(const mga::PcGroup& g) {
  ordered_json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["prime"] = g.prime();
  ordered_json gens = ordered_json::array();
  for (unsigned i = 0; i < g.ngens(); ++i)
    gens.push_back({{"index", i + 1}, {"order", g.orderOf(g.generator(i))}});
  j["generators"] = std::move(gens);
  if (g.order() <= mga::PcGroup::kMaxOrder) {
    const mga::Subgroup z = mga::center(g);
    const mga::Subgroup d = mga::derived(g);
    j["centerInvariants"] = mga::abelianInvariants(z);
    j["derivedOrder"] = d.order();
    j["frattiniIndex"] = g.order() / mga::frattini(g).order();
  }
  return j;
}

ordered_json censusJson(const mga::CensusResult& r) {
  ordered_json j;
  j["group"] = r.groupId;
  j["cyclicSubgroupClasses"] = r.csCount;
  j["elementClasses"] = r.classCount;
  j["rationalComponents"] = r.rationalComponents;
  j["complexComponents"] = r.complexComponents;
  if (r.degreeProfileKnown) {
    j["degreeProfile"] = {{"degree1", r.degreeOneCount}, {"degree2", r.degreeTwoCount}};
  } else {
    j["degreeProfile"] = nullptr;
  }
  return j;
}

ordered_json withMeta(ordered_json body, bool includeMeta) {
  if (!includeMeta) return body;
  ordered_json j;
  j["meta"] = {{"tool", "mga"}, {"version", "1.0.0"}};
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

int runReport(const mga::Report& report, const std::string& outPath, const std::string& format,
              bool noMeta, bool timings) {
  mga::ReportOptions opt;
  opt.includeMeta = !noMeta;
  opt.includeTimings = timings;
  emit(format == "csv" ? mga::toCsv(report) : mga::toJson(report, opt), outPath);
  return report.allPass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of modular group algebras of finite 2-groups"};
  app.require_subcommand(1);

  std::string ringSpec = "Zmod:4;n=2";
  std::string groupSpec;
  std::string outPath;
  std::string format = "json";
  std::string only;
  bool deep = false, noMeta = false, timings = false, printPresentation = false;
  unsigned depth = 8;
  unsigned pn = 4, pm = 3, pl = 2;

  CLI::App* cmdGroup = app.add_subcommand("group", "inspect a group: order, center, derived subgroup");
  cmdGroup->add_option("--group", groupSpec, "group name or @presentation-file")->required();
  cmdGroup->add_flag("--print", printPresentation, "print the pc presentation instead of JSON");
  cmdGroup->add_option("--out", outPath, "write output to a file");

  CLI::App* cmdFilt = app.add_subcommand("filtration", "Theta-power tables for a group algebra");
  cmdFilt->add_option("--ring", ringSpec, "coefficient ring spec");
  cmdFilt->add_option("--group", groupSpec, "group name or @presentation-file")->required();
  cmdFilt->add_option("--depth", depth, "largest exponent to compute");
  cmdFilt->add_option("--out", outPath, "write output to a file");
  cmdFilt->add_flag("--no-meta", noMeta, "omit the metadata header");

  CLI::App* cmdCensus = app.add_subcommand("census", "cyclic subgroup census and component counts");
  auto* censusGroupOpt = cmdCensus->add_option("--group", groupSpec, "group name or @presentation-file");
  std::vector<unsigned> compare;
  cmdCensus->add_option("--compare", compare, "compare G(n,m,l) and H(n,m,l)")->expected(3);
  cmdCensus->add_option("--out", outPath, "write output to a file");
  cmdCensus->add_flag("--no-meta", noMeta, "omit the metadata header");

  CLI::App* cmdObs = app.add_subcommand("obstruction", "verify SG and SH are non-isomorphic");
  cmdObs->add_option("--n", pn, "parameter n")->required();
  cmdObs->add_option("--m", pm, "parameter m")->required();
  cmdObs->add_option("--l", pl, "parameter l")->required();
  cmdObs->add_option("--ring", ringSpec, "coefficient ring spec");
  cmdObs->add_flag("--deep", deep, "also verify (5,3,2) and the extension ring");
  cmdObs->add_option("--out", outPath, "write output to a file");
  cmdObs->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmdObs->add_flag("--no-meta", noMeta, "omit the metadata header");
  cmdObs->add_flag("--timings", timings, "include per-item timings");

  CLI::App* cmdVerify = app.add_subcommand("verify", "run the full verification suite");
  cmdVerify->add_flag("--deep", deep, "add (5,3,2), the extension ring, and the (5,4,2) census");
  cmdVerify->add_option("--only", only, "run only items whose id contains this substring");
  cmdVerify->add_option("--out", outPath, "write output to a file");
  cmdVerify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmdVerify->add_flag("--no-meta", noMeta, "omit the metadata header");
  cmdVerify->add_flag("--timings", timings, "include per-item timings");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmdGroup->parsed()) {
      const mga::PcGroup g = loadGroup(groupSpec);
      if (printPresentation) {
        emit(mga::printPcPresentation(g.presentation()), outPath);
      } else {
        emit(withMeta(groupInfo(g), true).dump(2) + "\n", outPath);
      }
      return 0;
    }

    if (cmdFilt->parsed()) {
      const mga::CoefRing s = mga::parseRingSpec(ringSpec);
      const mga::PcGroup g = loadGroup(groupSpec);
      unsigned p = s.modulus();
      for (unsigned q = 2; q <= s.modulus(); ++q)
        if (s.modulus() % q == 0) {
          p = q;
          break;
        }
      mga::GroupAlgebra alg(s, g);
      const mga::IdealFiltration th = mga::thetaPowers(alg, depth);
      ordered_json body;
      body["ring"] = s.spec();
      body["group"] = g.name();
      body["prime"] = p;
      ordered_json entries = ordered_json::array();
      const bool cyclicShape = g.ngens() == 1;
      const bool dihedralShape = g.name() == "D16";
      for (unsigned k = 0; k <= depth; ++k) {
        ordered_json e;
        e["k"] = k;
        e["logSize"] = th.at(k).sizeLog(p);
        if (k < depth) e["logQuotient"] = th.at(k).sizeLog(p) - th.at(k + 1).sizeLog(p);
        if (cyclicShape || dihedralShape) {
          unsigned n2 = 0;
          for (std::size_t o = g.order(); o > 1; o /= 2) ++n2;
          const mga::ClosedFormEntry cf =
              cyclicShape ? mga::cyclicClosedForm(n2, k) : mga::dihedralClosedForm(k);
          ordered_json comps = ordered_json::array();
          for (const auto& c : cf.comps)
            comps.push_back({{"monomial", c.tag}, {"idealSize", mga::componentIdeal(c, s).size()}});
          e["closedForm"] = std::move(comps);
          e["closedFormMatchesBruteForce"] = mga::materialize(cf, alg) == th.at(k);
        }
        entries.push_back(std::move(e));
      }
      body["entries"] = std::move(entries);
      emit(withMeta(std::move(body), !noMeta).dump(2) + "\n", outPath);
      return 0;
    }

    if (cmdCensus->parsed()) {
      if (!compare.empty()) {
        const mga::CensusResult g = mga::wedderburnCounts(mga::familyG(compare[0], compare[1], compare[2]));
        const mga::CensusResult h = mga::wedderburnCounts(mga::familyH(compare[0], compare[1], compare[2]));
        ordered_json body;
        body["g"] = censusJson(g);
        body["h"] = censusJson(h);
        const bool complexIso = g.complexComponents == h.complexComponents &&
                                g.degreeProfileKnown && h.degreeProfileKnown &&
                                g.degreeOneCount == h.degreeOneCount &&
                                g.degreeTwoCount == h.degreeTwoCount;
        body["complexIsoAtCountLevel"] = complexIso;
        body["rationalIso"] = g.rationalComponents == h.rationalComponents;
        body["csDifference"] = static_cast<long long>(h.csCount) - static_cast<long long>(g.csCount);
        emit(withMeta(std::move(body), !noMeta).dump(2) + "\n", outPath);
        return 0;
      }
      if (censusGroupOpt->count() == 0)
        throw mga::Error(mga::Err::BadParameters, "census needs --group or --compare");
      const mga::PcGroup g = loadGroup(groupSpec);
      emit(withMeta(censusJson(mga::wedderburnCounts(g)), !noMeta).dump(2) + "\n", outPath);
      return 0;
    }

    if (cmdObs->parsed()) {
      const mga::CoefRing s = mga::parseRingSpec(ringSpec);
      mga::Report report;
      mga::VerificationReport vr = mga::verifyCounterexample(pn, pm, pl, s);
      report.items = vr.items;
      report.verdict = vr.certified ? "CERTIFIED" : "FAIL";
      if (deep) {
        const mga::VerificationReport d1 = mga::verifyCounterexample(5, 3, 2, s);
        mga::CongruenceReport r1{"deep:5,3,2", "counterexample certificate at (5,3,2)", d1.certified, ""};
        report.items.push_back(r1);
        const mga::CoefRing s2 = mga::parseRingSpec("Zmod:4[t]/(t^2);n=2,t");
        const mga::VerificationReport d2 = mga::verifyCounterexample(pn, pm, pl, s2);
        mga::CongruenceReport r2{"deep:ring2", "certificate over Zmod:4[t]/(t^2)", d2.certified, ""};
        report.items.push_back(r2);
        report.verdict = report.allPass() ? "CERTIFIED" : "FAIL";
      }
      return runReport(report, outPath, format, noMeta, timings);
    }

    if (cmdVerify->parsed()) {
      mga::VerifyOptions vo;
      vo.deep = deep;
      vo.only = only;
      vo.timings = timings;
      mga::Report report = mga::runVerify(vo);
      if (report.items.empty())
        throw mga::Error(mga::Err::BadParameters, "--only matched no items: " + only);
      return runReport(report, outPath, format, noMeta, timings);
    }
  } catch (const mga::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const mga::Error& e) {
    switch (e.code()) {
      case mga::Err::ParseError:
      case mga::Err::ValidationError:
      case mga::Err::BadParameters:
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
      default:
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
  }
  return 2;
}
