#include "gee/encoder.hpp"
#include "gee/errors.hpp"

namespace gee {

embedding_matrix embed_serial(const edge_list& el, const projection_matrix& w) {
  if (el.n != w.rows()) {
    throw contract_error("embed_serial: edge list has n = " + std::to_string(el.n) +
                         " but labels cover " + std::to_string(w.rows()) + " nodes");
  }
  validate(el);
  embedding_matrix z(el.n, w.cols());
  for (const edge& e : el.edges) {
    const class_id yu = w.label(e.u);
    const class_id yv = w.label(e.v);
    if (yv != 0) z(e.u, yv - 1) += w.scale(e.v) * e.w;
    if (yu != 0) z(e.v, yu - 1) += w.scale(e.u) * e.w;
  }
  return z;
}

embedding_matrix embed_serial(const edge_list& el, const label_vector& y) {
  if (el.n != y.size()) {
    throw contract_error("embed_serial: edge list has n = " + std::to_string(el.n) +
                         " but labels cover " + std::to_string(y.size()) + " nodes");
  }
  return embed_serial(el, build_projection(y));
}

}  // namespace gee
