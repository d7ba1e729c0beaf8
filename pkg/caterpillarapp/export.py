import networkx as nx

from .structures import ColoredGraph

PALETTE = (
    'red', 'blue', 'darkgreen', 'orange', 'purple', 'brown',
    'magenta', 'cyan', 'gold', 'gray', 'olive', 'navy',
)


def color_name(color: int) -> str:
    return PALETTE[(color - 1) % len(PALETTE)]


def export_dot(g: ColoredGraph) -> str:
    """Returns a DOT document with nodes v1..vn and edges styled by color."""
    graph = nx.Graph(name='realization')
    graph.add_nodes_from(f'v{x + 1}' for x in range(g.n))
    for u, v, color in g.edges():
        graph.add_edge(f'v{u + 1}', f'v{v + 1}', color=color_name(color), label=str(color))
    return nx.nx_pydot.to_pydot(graph).to_string()
