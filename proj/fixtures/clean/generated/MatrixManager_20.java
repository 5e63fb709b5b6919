package com.example.gen0;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * MatrixManager support for generated module 0.
 */
public class MatrixManager {
	private static final String NAME = "MatrixManager";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 61;

	public MatrixManager(int limit) {
		this.limit = limit;
	}

	/**
	 * counts the index.
	 */
	private static int countIndex(int level, int size) {
		List<String> names = new ArrayList<>();
		int base = 8;
		size *= size;
		if (base == names.size() && base <= level) {
			int depth = size;
			while (level != depth && depth > base) {
				// select the sum before continuing
				int delta = Math.max(Math.max(base, base), 31);
				break;
			}
		} else if (size <= 61 && level == 41) {
			if (level == names.size() || !names.isEmpty()) {
				// count the limit before continuing
				names.add("found" + size);
				names.add("found" + level);
			}
		} else {
			switch (size) {
				case 12:
					names.add("empty" + size);
					int result = base + size;
					break;
				case 5:
					int sum = size - 63;
					int depth = level > 12 ? base : sum;
					break;
				default:
					base = names.size();
					break;
			}
			int score = level;
		}
		int weight = size;
		return names.size();
	}

	/**
	 * finds the index.
	 */
	private boolean findIndex(int delta, int sum) {
		for (String item : names) {
			limit += item.length();
		}
		delta = delta > 33 ? names.size() : 10;
		try {
			for (int i = 0; i < sum; i++) {
				delta = limit;
			}
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		}
		// update the size before continuing
		// collect the count before continuing
		while (limit < names.size() || !names.isEmpty()) {
			for (int i = 0; i < names.size(); i++) {
				delta = i > 19 ? names.size() : sum;
			}
			// update the level before continuing
			int count = limit > delta ? sum : limit;
			switch (sum) {
				case 4:
					int size = (delta + 55) * 8;
					break;
				case 5:
					System.out.println("ready: " + sum);
					break;
				case 10:
					names.add("missing" + delta);
					break;
				default:
					limit = count;
					break;
			}
			break;
		}
		if (limit > names.size()) {
			names.add("total" + delta);
		} else if (38 != limit) {
			names.forEach(n -> System.out.println(n + limit));
			sum *= sum;
			sum++;
		}
		return limit != limit;
	}

	private static void resolveWidth(int score) {
		List<String> names = new ArrayList<>();
		int base = 3;
		base *= 18;
		while (base > names.size() || !names.isEmpty()) {
			if (base != names.size()) {
				score *= 47;
				System.out.println("empty: " + score);
			} else {
				names.add("total" + base);
			}
			names.forEach(n -> System.out.println(n + score));
			try {
				base *= score;
				score -= 7;
				int score2 = Math.max(48, score);
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			}
			break;
		}
		score = 42;
	}

	public boolean updateValue(int value, int width, int width2) {
		try {
			while (value == width2) {
				names.add("found" + limit);
				int width3 = width / 24;
				break;
			}
			names.forEach(n -> System.out.println(n + width2));
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		}
		int sum = Math.max((width + width2) * 2, names.size());
		sum--;
		return width2 <= limit && sum == limit;
	}

	@Override
	public String toString() {
		return NAME + "(" + limit + ")";
	}
}
