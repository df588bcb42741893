
# THIS FILE WAS GENERATED AUTOMATICALLY
preclones_version = "0.1.0"
