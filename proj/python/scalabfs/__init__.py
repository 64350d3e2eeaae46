"""ScalaBFS model: hybrid bitmap BFS engine, accelerator simulator and
closed-form performance model."""

from scalabfs._core import (  # noqa: F401
    Graph,
    EdgeList,
    generate_rmat,
    to_directed,
    dedup_edges,
    load_edge_list_text,
    build_graph,
    save_graph,
    load_graph,
    bfs_oracle,
    run_bfs,
    level_checksum,
    partition_info,
    placement_bytes,
    fifo_count,
    route_path,
    data_width,
    channel_bw,
    neighbor_fraction,
    perf_pg,
    perf_total,
    resource_check,
    sweep,
    run_simulation,
    UNREACHED,
    __version__,
)

__all__ = [
    "Graph",
    "EdgeList",
    "generate_rmat",
    "to_directed",
    "dedup_edges",
    "load_edge_list_text",
    "build_graph",
    "save_graph",
    "load_graph",
    "bfs_oracle",
    "run_bfs",
    "level_checksum",
    "partition_info",
    "placement_bytes",
    "fifo_count",
    "route_path",
    "data_width",
    "channel_bw",
    "neighbor_fraction",
    "perf_pg",
    "perf_total",
    "resource_check",
    "sweep",
    "run_simulation",
    "UNREACHED",
    "__version__",
]
