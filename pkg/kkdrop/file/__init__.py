from .csv import write as write_csv, read as read_csv
from .json import write as write_json, read as read_json, dumps as dumps_json
from .txt import write as write_txt, read as read_txt
