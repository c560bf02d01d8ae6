#pragma once

#include "majdom/digraph.hpp"

namespace majdom {

/// Replaces arc u->v by v->u. Throws when u->v is missing or v->u exists.
Digraph reverse_arc(const Digraph& d, Vertex u, Vertex v);

/// Removes arc u->v. Throws when it is missing.
Digraph delete_arc(const Digraph& d, Vertex u, Vertex v);

/// Removes v and its arcs; vertices above v shift down by one.
Digraph delete_vertex(const Digraph& d, Vertex v);

/// Orients every mixed-sign edge from its -1 end to its +1 end and every
/// same-sign edge from the lower index to the higher one. f is then a MODF
/// of the result. Throws unless f is majority dominating in g.
Digraph orientation_from_majority_function(const Graph& g, const SignFunction& f);

}  // namespace majdom
