from pathlib import Path

from syllnet.netbuild import Linking, NetworkVariant, SyllableNetwork


def make_net(nodes, edges, directed=False, weighted=False, weights=None, linking=Linking.CO_OCCURRENCE):
    net = SyllableNetwork(NetworkVariant(linking, directed, weighted))
    for u in nodes:
        net.add_node(u)
    for i, (u, v) in enumerate(edges):
        net.add_edge(u, v, weights[i] if weights else 1)
    return net


def triangle():
    return make_net("abc", [("a", "b"), ("b", "c"), ("a", "c")])


def path3():
    return make_net("abc", [("a", "b"), ("b", "c")])


def star(leaves, centre="x"):
    names = [f"l{i}" for i in range(leaves)]
    return make_net([centre, *names], [(centre, leaf) for leaf in names])


def square_with_chord():
    return make_net([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])


def golden_words():
    """(word, hand split, category) rows of the syllabification fixture."""
    rows = []
    path = Path(__file__).parent / "data" / "syllabification_golden.tsv"
    for line in path.read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            word, split, category = line.split("\t")
            rows.append((word, split, category))
    return rows
