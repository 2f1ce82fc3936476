#include "crosscount/count.hpp"

#include "crosscount/angular_orders.hpp"
#include "crosscount/error.hpp"
#include "crosscount/general_position.hpp"
#include "crosscount/neighbor_splits.hpp"
#include "crosscount/ray_counts.hpp"
#include "crosscount/rotation.hpp"

namespace crosscount {

PatternTotals count_crossings(const GeometricGraph& g, const CountOptions& options) {
    const auto report = validate_general_position(g.points(), g.edges());
    if (!report.ok) throw Error(ErrorKind::GeneralPositionViolation, report.summary());

    const Adjacency adj(g);
    const AngularTables ang = angular_orders(g, options.jobs);
    const NeighborSplit split = neighbor_splits(g.points(), adj, ang.ccw_rows(), options.jobs);
    const RayCounts rays = horizontal_ray_counts(adj, ang, options.jobs);
    return rotational_totals(g.points(), adj, ang, split, rays, options.jobs);
}

}  // namespace crosscount
