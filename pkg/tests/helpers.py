from relay import DeliveryInstance, PathRef, WeightedGraph


def unit_path(W, agents, extra=(), budgets=None):
    """Unit path ``0..W`` plus optional extra edges hanging off it."""
    edges = tuple((i, i + 1, 1) for i in range(W)) + tuple(extra)
    n = max([W + 1] + [max(u, v) + 1 for u, v, _ in extra])
    g = WeightedGraph(n, edges)
    return DeliveryInstance(g, PathRef.from_graph(g, range(W + 1)), tuple(agents), budgets)


def weighted_path(weights, agents, extra=()):
    edges = tuple((i, i + 1, w) for i, w in enumerate(weights)) + tuple(extra)
    n = max([len(weights) + 1] + [max(u, v) + 1 for u, v, _ in extra])
    g = WeightedGraph(n, edges)
    return DeliveryInstance(g, PathRef.from_graph(g, range(len(weights) + 1)), tuple(agents))
