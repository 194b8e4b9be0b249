# Exceptions package 