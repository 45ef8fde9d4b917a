from .direction import Direction
from .intersection import Centrality
from .intersection import Intersection
from .lane import Lane
from .road_network import RoadNetwork

__all__ = ['Centrality', 'Direction', 'Intersection', 'Lane', 'RoadNetwork']
