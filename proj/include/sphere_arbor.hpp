#ifndef SPHERE_ARBOR_HPP
#define SPHERE_ARBOR_HPP

#include <sphere_arbor/arboricity.hpp>
#include <sphere_arbor/barycentric.hpp>
#include <sphere_arbor/census.hpp>
#include <sphere_arbor/coloring.hpp>
#include <sphere_arbor/errors.hpp>
#include <sphere_arbor/flow.hpp>
#include <sphere_arbor/forest.hpp>
#include <sphere_arbor/graph.hpp>
#include <sphere_arbor/io.hpp>
#include <sphere_arbor/isomorphism.hpp>
#include <sphere_arbor/pipeline.hpp>
#include <sphere_arbor/rational.hpp>
#include <sphere_arbor/surgery.hpp>
#include <sphere_arbor/topology.hpp>

#endif // SPHERE_ARBOR_HPP
