from .element import KKElement
from .info import KKCanonicalForm, KKGroupInfo
