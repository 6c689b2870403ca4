"""Impact of every articulation point of an undirected graph in O(n + m).

The impact of a vertex is the number of vertices cut off from the largest
surviving connected component when that vertex is removed. One DFS builds the
block forest (square nodes = vertices, round nodes = biconnected components),
one sweep counts squares per subtree, and one more pass reads every vertex's
impact off those counts. A brute-force removal oracle ships alongside for
verification.
"""

from .bench import BenchRow, sweep, time_all_impacts
from .dot import export_dot
from .forest import (
    BlockForest,
    BlockForestBuilder,
    DfsState,
    articulation_points,
    biconnected_components,
    bridges,
    build_block_forest,
    dfs_visit,
    rerooted_at,
)
from .graph import (
    GENERATOR_FAMILIES,
    CcLabeling,
    GeneratorSpec,
    Graph,
    ParseError,
    ParseResult,
    connected_components,
    format_edge_list,
    generate,
    parse_dimacs,
    parse_edge_list,
)
from .impact import (
    ImpactReport,
    SqSizes,
    VertexImpact,
    compute_all_impacts,
    compute_impact,
    compute_sq_sizes,
    impact_vector,
)
from .oracle import (
    naive_all_impacts,
    naive_articulation_points,
    naive_impact,
    surviving_component_sizes,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRow",
    "BlockForest",
    "BlockForestBuilder",
    "CcLabeling",
    "DfsState",
    "GENERATOR_FAMILIES",
    "GeneratorSpec",
    "Graph",
    "ImpactReport",
    "ParseError",
    "ParseResult",
    "SqSizes",
    "VertexImpact",
    "articulation_points",
    "biconnected_components",
    "bridges",
    "build_block_forest",
    "compute_all_impacts",
    "compute_impact",
    "compute_sq_sizes",
    "connected_components",
    "dfs_visit",
    "export_dot",
    "format_edge_list",
    "generate",
    "impact_vector",
    "naive_all_impacts",
    "naive_articulation_points",
    "naive_impact",
    "parse_dimacs",
    "parse_edge_list",
    "rerooted_at",
    "surviving_component_sizes",
    "sweep",
    "time_all_impacts",
    "__version__",
]
