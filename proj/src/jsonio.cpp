#include "gln/jsonio.hpp"

#include <nlohmann/json.hpp>

#include "gln/errors.hpp"
#include "gln/textio.hpp"

namespace gln {

namespace {

using json = nlohmann::ordered_json;

json mat_rows(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string orbit_space_json(const OrbitSpace& space) {
  json out;
  out["schema"] = 1;
  out["lambda"] = render(space.lambda());
  out["dimV"] = space.dim_v();
  json orbits = json::array();
  for (int i = 0; i < space.size(); ++i) {
    json o;
    o["multisegment"] = render(space.orbit(i));
    o["dim"] = space.dim(i);
    json ranks;
    for (const auto& [key, r] : space.ranks(i)) {
      const auto& [line_key, a, b] = key;
      ranks[render(Segment(line_key.line, a, b))] = r;
    }
    o["ranks"] = std::move(ranks);
    orbits.push_back(std::move(o));
  }
  out["orbits"] = std::move(orbits);
  return out.dump(2) + "\n";
}

std::string matrices_json(const OrbitSpace& space, const MultiplicityMatrices& mm) {
  json out;
  out["schema"] = 1;
  out["lambda"] = render(space.lambda());
  json orbits = json::array();
  for (int i = 0; i < space.size(); ++i) orbits.push_back(render(space.orbit(i)));
  out["orbits"] = std::move(orbits);
  out["m"] = mat_rows(mm.m);
  out["c"] = mat_rows(mm.c);
  return out.dump(2) + "\n";
}

std::string square_report_json(const SquareReport& report) {
  json out;
  out["psi"] = render(report.psi);
  out["lambda"] = render(report.lambda);
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["F"] = render(r.f);
    row["basis"] = r.basis == BasisTag::ICSheaf ? "IC" : "std";
    row["top"] = r.top;
    row["left"] = r.left;
    row["bottom"] = r.bottom;
    row["right"] = r.right;
    row["pass"] = r.pass;
    rows.push_back(std::move(row));
  }
  out["square"] = std::move(rows);
  out["schema"] = 1;
  return out.dump(2) + "\n";
}

std::string packet_json(Workspace& ws, const ArthurParameter& psi) {
  json out;
  out["schema"] = 1;
  out["psi"] = render(psi);
  InfinitesimalParameter lambda = infinitesimal(psi);
  out["lambda"] = render(lambda);
  out["pi"] = render(pi_of(psi));
  out["c_psi"] = render(pi_of(psi));
  const OrbitSpace& sp = ws.space(lambda);
  int pi_idx = sp.index_of(pi_of(psi));
  out["d"] = pi_idx < 0 ? -1 : sp.dim(pi_idx);
  json packet = json::array();
  json ranks = json::array();
  for (int i = 0; i < sp.size(); ++i) {
    std::int64_t r = evs_rank(ws, psi, sp.orbit(i));
    if (r == 0) continue;
    packet.push_back(render(sp.orbit(i)));
    ranks.push_back(r);
  }
  out["abv_packet"] = std::move(packet);
  out["evs_rank"] = std::move(ranks);
  return out.dump(2) + "\n";
}

std::string lift_json(Workspace& ws, const ArthurParameter& psi,
                      const std::vector<std::vector<int>>& grouping) {
  const auto& comps = psi.components();
  std::vector<ArthurParameter> parts;
  std::vector<InfinitesimalParameter> lambdas;
  for (const auto& group : grouping) {
    std::vector<ArthurComponent> cs;
    for (int k : group) cs.push_back(comps.at(k));
    parts.push_back(ArthurParameter(std::move(cs)));
    lambdas.push_back(infinitesimal(parts.back()));
  }
  InfinitesimalParameter lambda = infinitesimal(psi);
  LeviBlocks levi = ws.levi_blocks(lambdas);
  IntMat l = lift_sim(ws, lambda, levi);
  IntMat lstd = lift_std(ws, lambda, levi);
  IntMat estd = eps_star_std(ws, lambda, levi);
  IntMat esim = eps_star_simple(ws, lambda, levi);
  const OrbitSpace& sp = ws.space(lambda);

  json out;
  out["schema"] = 1;
  out["psi"] = render(psi);
  json blocks = json::array();
  for (const auto& p : parts) blocks.push_back(render(p));
  out["levi"] = std::move(blocks);
  out["lambda"] = render(lambda);
  json tuples = json::array();
  for (int t = 0; t < levi.tuple_count(); ++t) {
    std::vector<int> idx = levi.tuple_at(t);
    json entry;
    entry["index"] = t;
    json factors = json::array();
    for (std::size_t i = 0; i < idx.size(); ++i)
      factors.push_back(render(levi.spaces[i].orbit(idx[i])));
    entry["factors"] = std::move(factors);
    json image = json::array();
    for (int r = 0; r < l.rows(); ++r) {
      if (l.at(r, t) == 0) continue;
      json term;
      term["multisegment"] = render(sp.orbit(r));
      term["mult"] = l.at(r, t);
      image.push_back(std::move(term));
    }
    entry["image"] = std::move(image);
    tuples.push_back(std::move(entry));
  }
  out["tuples"] = std::move(tuples);
  out["lift_sim"] = mat_rows(l);
  out["lift_std"] = mat_rows(lstd);
  out["eps_std"] = mat_rows(estd);
  out["eps_sim"] = mat_rows(esim);
  return out.dump(2) + "\n";
}

}  // namespace gln
