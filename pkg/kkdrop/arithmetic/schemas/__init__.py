from .bezout import BezoutPair
